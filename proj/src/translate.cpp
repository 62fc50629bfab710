#include "maninkit/translate.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maninkit/corpus.hpp"
#include "maninkit/quadalg.hpp"

namespace maninkit {

namespace {

void require_one_point(const SemiLinearSet& x, const char* what) {
    if (x.points() != 1)
        throw InputError(std::string(what) +
                         ": carriers over more than one point are not "
                         "supported (the extension over function algebras is "
                         "deliberately out of scope)");
}

void require_field(const Field& have, const Field& want, const char* what) {
    if (!(have == want))
        throw FieldMismatchError(std::string(what) +
                                 ": data over a different field");
}

/// True iff every column of m picks exactly one basis vector with
/// coefficient 1 and no two columns pick the same one.
bool is_permutation_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    const Scalar one = Scalar::one(m.field());
    std::vector<char> used(static_cast<std::size_t>(m.rows()), 0);
    for (int j = 0; j < m.cols(); ++j) {
        int hits = 0, row = -1;
        for (int i = 0; i < m.rows(); ++i) {
            if (m.at(i, j).is_zero()) continue;
            if (!(m.at(i, j) == one)) return false;
            ++hits;
            row = i;
        }
        if (hits != 1 || used[static_cast<std::size_t>(row)]) return false;
        used[static_cast<std::size_t>(row)] = 1;
    }
    return true;
}

/// The coaction of a lifted representation, extended from its degree-1
/// block d1[x*dv + i, j] = rho[j*dv + i, x] over a caller-supplied
/// truncation of the image carrier.
GradedMorphism coaction_on(const SemiLinearMap& rho, const GradedComonoid& co,
                           const GradedAlgebraPtr& fv_t, int dv) {
    const Field& f = fv_t->field();
    int dx = co.x->dim(1);
    Matrix d1(f, dx * dv, dv);
    for (int x = 0; x < dx; ++x)
        for (int i = 0; i < dv; ++i)
            for (int j = 0; j < dv; ++j)
                d1.at(x * dv + i, j) = rho.fx[0].at(j * dv + i, x);
    GradedAlgebraPtr tgt = degreewise_product(co.x, fv_t);
    auto res = morphism_from_degree1(fv_t, tgt, d1);
    if (!res.morphism)
        throw InternalError("lifted coaction failed to extend: " +
                            res.witness);
    return *res.morphism;
}

/// phi: coend(F V) -> F(end V) out of a caller-supplied cohom object, so
/// that lifts can stay on the coend they were built over.
GradedMorphism end_phi(const MonoidalFunctorData& fd, const CohomObject& ch,
                       const GradedAlgebraPtr& image, int dim_v,
                       int top_degree, Budget& budget) {
    ProductComparison pc =
        product_comparison(fd, dim_v * dim_v, dim_v, top_degree, budget);
    FinVec v{fd.field, dim_v};
    GradedMorphism fev =
        functor_arrow_on(fd, ev_matrix(v, v), ch.target_t, pc.source);
    return vartheta_inverse(ch, image, pc.phi.compose(fev).at(1));
}

}  // namespace

MonoidalFunctorData tstar(const Field& f) {
    return {SpaceFunctor::FreeDual, f, true, true, true};
}

MonoidalFunctorData sstar(const Field& f) {
    if (f.characteristic() == 2)
        throw InputError(
            "the symmetric-dual instance needs 1/2 to split degree-2 tensors "
            "into symmetric and antisymmetric parts; characteristic 2 is "
            "rejected");
    return {SpaceFunctor::SymmetricDual, f, false, true, true};
}

QuadraticAlgebra functor_object(const MonoidalFunctorData& fd, int dim) {
    if (dim < 1) throw InputError("functor_object needs dimension >= 1");
    QuadraticAlgebra free = free_algebra(fd.field, dim);
    if (fd.kind == SpaceFunctor::FreeDual) return free;
    const Field& f = fd.field;
    std::vector<Vec> gens;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Vec r(static_cast<std::size_t>(dim) * dim, Scalar::zero(f));
            r[static_cast<std::size_t>(i) * dim + j] = Scalar::one(f);
            r[static_cast<std::size_t>(j) * dim + i] = -Scalar::one(f);
            gens.push_back(std::move(r));
        }
    Subspace rel = gens.empty() ? Subspace::zero(f, dim * dim)
                                : Subspace::span(f, gens, dim * dim);
    return QuadraticAlgebra::make(f, free.labels, std::move(rel));
}

GradedMorphism functor_arrow_on(const MonoidalFunctorData& fd, const Matrix& m,
                                const GradedAlgebraPtr& source_t,
                                const GradedAlgebraPtr& target_t) {
    require_field(m.field(), fd.field, "functor_arrow");
    if (source_t->dim(1) != m.rows() || target_t->dim(1) != m.cols())
        throw DimensionError(
            "functor_arrow: generator counts do not match the matrix shape");
    auto res = morphism_from_degree1(source_t, target_t, m.transpose());
    if (!res.morphism)
        throw InternalError("functor arrow failed to extend: " + res.witness);
    return *res.morphism;
}

GradedMorphism functor_arrow(const MonoidalFunctorData& fd, const Matrix& m,
                             int top_degree, Budget& budget) {
    GradedAlgebraPtr src =
        truncate(functor_object(fd, m.rows()), top_degree, budget);
    GradedAlgebraPtr tgt =
        truncate(functor_object(fd, m.cols()), top_degree, budget);
    return functor_arrow_on(fd, m, src, tgt);
}

ProductComparison product_comparison(const MonoidalFunctorData& fd, int dim_v,
                                     int dim_w, int top_degree,
                                     Budget& budget) {
    GradedAlgebraPtr source =
        truncate(functor_object(fd, dim_v * dim_w), top_degree, budget);
    GradedAlgebraPtr left =
        truncate(functor_object(fd, dim_v), top_degree, budget);
    GradedAlgebraPtr right =
        truncate(functor_object(fd, dim_w), top_degree, budget);
    GradedAlgebraPtr pair = degreewise_product(left, right);
    auto res = morphism_from_degree1(
        source, pair, Matrix::identity(fd.field, dim_v * dim_w));
    if (!res.morphism)
        throw InternalError("product comparison failed to extend: " +
                            res.witness);
    GradedMorphism phi = *res.morphism;
    std::optional<GradedMorphism> inv;
    if (fd.strong) {
        std::vector<Matrix> mats;
        for (int k = 0; k <= top_degree; ++k) {
            if (!is_permutation_matrix(phi.at(k)))
                throw InternalError(
                    "strong product comparison is not a basis bijection in "
                    "degree " +
                    std::to_string(k));
            mats.push_back(phi.at(k).transpose());
        }
        inv.emplace(GradedMorphism(pair, source, std::move(mats)));
    }
    return {std::move(source), std::move(left), std::move(right),
            std::move(pair),   std::move(phi),  std::move(inv)};
}

std::vector<std::string> check_comparison_coherence(
    const MonoidalFunctorData& fd, int dim_v, int dim_w, int dim_u,
    int top_degree, Budget& budget) {
    const Field& f = fd.field;
    std::vector<std::string> out;

    // Associativity: the two regroupings of F(V (x) W (x) U) into the
    // threefold matched product agree (flat indices match literally).
    ProductComparison a =
        product_comparison(fd, dim_v * dim_w, dim_u, top_degree, budget);
    ProductComparison bvw =
        product_comparison(fd, dim_v, dim_w, top_degree, budget);
    ProductComparison c =
        product_comparison(fd, dim_v, dim_w * dim_u, top_degree, budget);
    ProductComparison dwu =
        product_comparison(fd, dim_w, dim_u, top_degree, budget);
    GradedAlgebraPtr triple1 = degreewise_product(bvw.pair, a.right);
    GradedAlgebraPtr triple2 = degreewise_product(c.left, dwu.pair);
    GradedMorphism r1 =
        degreewise_tensor(bvw.phi, GradedMorphism::identity(a.right), a.pair,
                          triple1)
            .compose(a.phi);
    GradedMorphism r2 =
        degreewise_tensor(GradedMorphism::identity(c.left), dwu.phi, c.pair,
                          triple2)
            .compose(c.phi);
    for (int k = 0; k <= top_degree; ++k)
        if (!(r1.at(k) == r2.at(k))) {
            out.push_back("associativity: the two regroupings differ in degree " +
                          std::to_string(k));
            break;
        }

    // Unit triangles: against a one-dimensional factor the comparison is
    // the identity in every degree.
    ProductComparison ul = product_comparison(fd, 1, dim_w, top_degree, budget);
    ProductComparison ur = product_comparison(fd, dim_v, 1, top_degree, budget);
    for (int k = 0; k <= top_degree; ++k)
        if (!(ul.phi.at(k) == Matrix::identity(f, ul.source->dim(k)))) {
            out.push_back("left unit triangle fails in degree " +
                          std::to_string(k));
            break;
        }
    for (int k = 0; k <= top_degree; ++k)
        if (!(ur.phi.at(k) == Matrix::identity(f, ur.source->dim(k)))) {
            out.push_back("right unit triangle fails in degree " +
                          std::to_string(k));
            break;
        }

    // Symmetry: the comparison commutes with the factor swap.
    ProductComparison pwv =
        product_comparison(fd, dim_w, dim_v, top_degree, budget);
    GradedMorphism fsig = functor_arrow_on(fd, flip_matrix(f, dim_v, dim_w),
                                           pwv.source, bvw.source);
    GradedMorphism lhs = bvw.phi.compose(fsig);
    std::vector<Matrix> smats;
    for (int k = 0; k <= top_degree; ++k)
        smats.push_back(flip_matrix(f, pwv.left->dim(k), pwv.right->dim(k)));
    GradedMorphism sw(pwv.pair, bvw.pair, std::move(smats));
    GradedMorphism rhs = sw.compose(pwv.phi);
    for (int k = 0; k <= top_degree; ++k)
        if (!(lhs.at(k) == rhs.at(k))) {
            out.push_back("symmetry square fails in degree " +
                          std::to_string(k));
            break;
        }
    return out;
}

std::vector<std::string> check_comparison_interchange(
    const MonoidalFunctorData& fd, int dim_x, int dim_y, int dim_z, int dim_w,
    int top_degree, Budget& budget) {
    const Field& f = fd.field;
    std::vector<std::string> out;
    ProductComparison pcA =
        product_comparison(fd, dim_x * dim_y, dim_z * dim_w, top_degree,
                           budget);
    ProductComparison pcB =
        product_comparison(fd, dim_x * dim_z, dim_y * dim_w, top_degree,
                           budget);
    ProductComparison pXY = product_comparison(fd, dim_x, dim_y, top_degree,
                                               budget);
    ProductComparison pZW = product_comparison(fd, dim_z, dim_w, top_degree,
                                               budget);
    ProductComparison pXZ = product_comparison(fd, dim_x, dim_z, top_degree,
                                               budget);
    ProductComparison pYW = product_comparison(fd, dim_y, dim_w, top_degree,
                                               budget);
    GradedAlgebraPtr pairL = degreewise_product(pXY.pair, pZW.pair);
    GradedAlgebraPtr pairR = degreewise_product(pXZ.pair, pYW.pair);

    // Left route: both pairwise comparisons, then the swap of the two
    // middle matched factors.
    GradedMorphism two = degreewise_tensor(pXY.phi, pZW.phi, pcA.pair, pairL);
    std::vector<Matrix> smats;
    for (int k = 0; k <= top_degree; ++k)
        smats.push_back(middle_swap4(f, pXY.left->dim(k), pXY.right->dim(k),
                                     pZW.left->dim(k), pZW.right->dim(k)));
    GradedMorphism sD(pairL, pairR, std::move(smats));
    GradedMorphism lhs = sD.compose(two).compose(pcA.phi);

    // Right route: the image of the middle swap, then the regrouped
    // comparisons.
    Matrix g = middle_swap4(f, dim_x, dim_z, dim_y, dim_w);
    GradedMorphism fg = functor_arrow_on(fd, g, pcA.source, pcB.source);
    GradedMorphism twoR = degreewise_tensor(pXZ.phi, pYW.phi, pcB.pair, pairR);
    GradedMorphism rhs = twoR.compose(pcB.phi).compose(fg);

    for (int k = 0; k <= top_degree; ++k)
        if (!(lhs.at(k) == rhs.at(k))) {
            out.push_back("interchange square fails in degree " +
                          std::to_string(k));
            break;
        }
    return out;
}

GradedComonoid translated_comonoid(const MonoidalFunctorData& fd,
                                   const VecMonoid& m, int top_degree,
                                   Budget& budget) {
    require_one_point(m.x, "translated_comonoid");
    require_field(m.x.v.field, fd.field, "translated_comonoid");
    {
        auto errs = check_vec_monoid(m);
        if (!errs.empty())
            throw ValidationError(
                "translated_comonoid: the input monoid fails its laws: " +
                errs.front());
    }
    int d = m.x.v.dim;
    ProductComparison pc = product_comparison(fd, d, d, top_degree, budget);
    GradedAlgebraPtr line = truncate(functor_object(fd, 1), top_degree, budget);
    GradedMorphism fmu = functor_arrow_on(fd, m.mu.fx[0], pc.left, pc.source);
    GradedMorphism delta = pc.phi.compose(fmu);
    GradedMorphism eps = functor_arrow_on(fd, m.eta.fx[0], pc.left, line);
    auto errs = check_comonoid(delta, eps, top_degree);
    if (!errs.empty())
        throw InternalError("translated comonoid violates its own laws: " +
                            errs.front());
    return {pc.left, std::move(delta), std::move(eps)};
}

GradedBimonoid translated_bimonoid(const MonoidalFunctorData& fd,
                                   const VecBimonoid& b, int top_degree,
                                   Budget& budget) {
    if (!fd.strong)
        throw InputError(
            "translated_bimonoid: the multiplication needs the inverse "
            "product comparison, which only the strong (free-dual) instance "
            "provides");
    require_one_point(b.x, "translated_bimonoid");
    require_field(b.x.v.field, fd.field, "translated_bimonoid");
    {
        auto errs = check_vec_bimonoid(b);
        if (!errs.empty())
            throw ValidationError(
                "translated_bimonoid: the input bimonoid fails its laws: " +
                errs.front());
    }
    int d = b.x.v.dim;
    ProductComparison pc = product_comparison(fd, d, d, top_degree, budget);
    GradedAlgebraPtr line = truncate(functor_object(fd, 1), top_degree, budget);
    GradedMorphism fmu = functor_arrow_on(fd, b.mu.fx[0], pc.left, pc.source);
    GradedMorphism fdelta =
        functor_arrow_on(fd, b.delta.fx[0], pc.source, pc.left);
    GradedMorphism feta = functor_arrow_on(fd, b.eta.fx[0], pc.left, line);
    GradedMorphism feps = functor_arrow_on(fd, b.eps.fx[0], line, pc.left);
    GradedBimonoid out{pc.left, fdelta.compose(*pc.phi_inverse),
                       std::move(feps), pc.phi.compose(fmu), std::move(feta)};
    auto errs = check_bimonoid(out, top_degree);
    if (!errs.empty())
        throw InternalError("translated bimonoid violates its own laws: " +
                            errs.front());
    return out;
}

PhiTransform phi_transform(const MonoidalFunctorData& fd, int dim_v, int dim_w,
                           int top_degree, Budget& budget) {
    if (dim_v < 1 || dim_w < 1)
        throw InputError("phi_transform needs dimensions >= 1");
    CohomObject ch = cohom(functor_object(fd, dim_v),
                           functor_object(fd, dim_w), top_degree, budget);
    ProductComparison pc =
        product_comparison(fd, dim_v * dim_w, dim_v, top_degree, budget);
    FinVec v{fd.field, dim_v}, w{fd.field, dim_w};
    GradedMorphism fev =
        functor_arrow_on(fd, ev_matrix(v, w), ch.target_t, pc.source);
    GradedMorphism phi =
        vartheta_inverse(ch, pc.left, pc.phi.compose(fev).at(1));
    std::vector<char> iso(static_cast<std::size_t>(top_degree) + 1, 0);
    for (int k = 0; k <= top_degree; ++k)
        iso[static_cast<std::size_t>(k)] =
            ch.hom_t->dim(k) == pc.left->dim(k) &&
            phi.at(k).rank() == ch.hom_t->dim(k);
    return {std::move(ch), pc.left, std::move(phi), std::move(iso)};
}

std::vector<std::string> check_phi_naturality(const MonoidalFunctorData& fd,
                                              const Matrix& f, const Matrix& g,
                                              int top_degree, Budget& budget) {
    require_field(f.field(), fd.field, "check_phi_naturality");
    require_field(g.field(), fd.field, "check_phi_naturality");
    int dv = f.rows(), dvp = f.cols();
    int dwp = g.rows(), dw = g.cols();
    PhiTransform big = phi_transform(fd, dv, dw, top_degree, budget);
    PhiTransform small = phi_transform(fd, dvp, dwp, top_degree, budget);
    CohomObject mixed = cohom(functor_object(fd, dv),
                              functor_object(fd, dwp), top_degree, budget);
    GradedMorphism step1 =
        cohom_map_parameter(small.ch, mixed, f.transpose());
    GradedMorphism step2 = cohom_map_target(mixed, big.ch, g.transpose());
    GradedMorphism lhs = big.phi.compose(step2).compose(step1);
    GradedMorphism fhom =
        functor_arrow_on(fd, hom_map_matrix(f, g), small.image, big.image);
    GradedMorphism rhs = fhom.compose(small.phi);
    std::vector<std::string> out;
    for (int k = 0; k <= top_degree; ++k)
        if (!(lhs.at(k) == rhs.at(k))) {
            out.push_back("naturality square fails in degree " +
                          std::to_string(k));
            break;
        }
    return out;
}

EndComparison end_comparison(const MonoidalFunctorData& fd, int dim_v,
                             int top_degree, Budget& budget) {
    CoendComonoid e =
        coend_comonoid(functor_object(fd, dim_v), top_degree, budget);
    EndMonoid em = end_monoid(vect_slset(FinVec{fd.field, dim_v}));
    GradedComonoid target =
        translated_comonoid(fd, em.monoid, top_degree, budget);
    GradedMorphism phi =
        end_phi(fd, e.ch, target.x, dim_v, top_degree, budget);
    std::vector<char> iso(static_cast<std::size_t>(top_degree) + 1, 0);
    for (int k = 0; k <= top_degree; ++k)
        iso[static_cast<std::size_t>(k)] =
            e.ch.hom_t->dim(k) == target.x->dim(k) &&
            phi.at(k).rank() == e.ch.hom_t->dim(k);
    return {std::move(e), std::move(target), std::move(phi), std::move(iso)};
}

std::vector<std::string> check_end_comparison(const EndComparison& ec,
                                              int degree) {
    return check_comonoid_morphism(ec.phi, ec.source.d, ec.source.v,
                                   ec.target.delta, ec.target.eps, degree);
}

Corepresentation lift_rep(const MonoidalFunctorData& fd,
                          const SemiLinearMap& rho, const VecMonoid& m,
                          const FinVec& v, const GradedComonoid& co,
                          int top_degree, Budget& budget) {
    require_one_point(m.x, "lift_rep");
    require_field(v.field, fd.field, "lift_rep");
    require_field(m.x.v.field, fd.field, "lift_rep");
    {
        auto errs = rep_check(rho, m, v);
        if (!errs.empty())
            throw ValidationError("lift_rep: representation rejected: " +
                                  errs.front());
    }
    QuadraticAlgebra fv = functor_object(fd, v.dim);
    CoendComonoid e = coend_comonoid(fv, top_degree, budget);
    GradedAlgebraPtr fend =
        truncate(functor_object(fd, v.dim * v.dim), top_degree, budget);
    GradedMorphism phi = end_phi(fd, e.ch, fend, v.dim, top_degree, budget);
    GradedMorphism fr = functor_arrow_on(fd, rho.fx[0], fend, co.x);
    Corepresentation out{std::move(fv), std::move(e), co, fr.compose(phi)};
    CorepReport rep = corep_check(out, top_degree);
    if (!rep.pass)
        throw InternalError("lifted corepresentation fails its laws in degree " +
                            std::to_string(rep.degree) + ": " + rep.witness);
    return out;
}

Corepresentation lift_rep(const MonoidalFunctorData& fd,
                          const SemiLinearMap& rho, const VecMonoid& m,
                          const FinVec& v, int top_degree, Budget& budget) {
    GradedComonoid co = translated_comonoid(fd, m, top_degree, budget);
    return lift_rep(fd, rho, m, v, co, top_degree, budget);
}

GradedMorphism lift_coaction(const MonoidalFunctorData& fd,
                             const SemiLinearMap& rho, const VecMonoid& m,
                             const FinVec& v, const GradedComonoid& co,
                             int top_degree, Budget& budget) {
    require_one_point(m.x, "lift_coaction");
    require_field(v.field, fd.field, "lift_coaction");
    {
        auto errs = rep_check(rho, m, v);
        if (!errs.empty())
            throw ValidationError("lift_coaction: representation rejected: " +
                                  errs.front());
    }
    GradedAlgebraPtr fv_t =
        truncate(functor_object(fd, v.dim), top_degree, budget);
    return coaction_on(rho, co, fv_t, v.dim);
}

LiftMonoidalityReport verify_lift_unit(const MonoidalFunctorData& fd,
                                       const VecBimonoid& b, int top_degree,
                                       Budget& budget) {
    if (!fd.strong)
        throw InputError(
            "verify_lift_unit: only the strong instance translates bimonoids");
    GradedBimonoid bt = translated_bimonoid(fd, b, top_degree, budget);
    GradedComonoid co = bt.comonoid();
    SemiLinearMap rho_eps{{0}, {b.eps.fx[0]}, 1};
    FinVec unit{fd.field, 1};
    Corepresentation lift =
        lift_rep(fd, rho_eps, b.monoid(), unit, co, top_degree, budget);
    Corepresentation u = unit_corep(bt, top_degree, budget);
    CorepReport r = corep_check(u, top_degree);
    if (!r.pass)
        return {false, r.degree, "unit corepresentation: " + r.witness};
    Matrix id1 = Matrix::identity(fd.field, 1);
    CorepReport fwd = corep_morphism_check(id1, lift, u, top_degree, budget);
    if (!fwd.pass)
        return {false, fwd.degree,
                "unit comparison, lift to unit: " + fwd.witness};
    CorepReport bwd = corep_morphism_check(id1, u, lift, top_degree, budget);
    if (!bwd.pass)
        return {false, bwd.degree,
                "unit comparison, unit to lift: " + bwd.witness};
    return {};
}

LiftMonoidalityReport verify_lift_monoidality(
    const MonoidalFunctorData& fd, const VecBimonoid& b,
    const SemiLinearMap& rho, const FinVec& v, const SemiLinearMap& rhop,
    const FinVec& vp, int top_degree, Budget& budget) {
    if (!fd.strong)
        throw InputError(
            "verify_lift_monoidality: only the strong instance translates "
            "bimonoids");
    require_one_point(b.x, "verify_lift_monoidality");
    require_field(v.field, fd.field, "verify_lift_monoidality");
    require_field(vp.field, fd.field, "verify_lift_monoidality");
    VecMonoid m = b.monoid();
    for (const SemiLinearMap* r : {&rho, &rhop}) {
        auto errs = rep_check(*r, m, r == &rho ? v : vp);
        if (!errs.empty())
            throw ValidationError(
                "verify_lift_monoidality: representation rejected: " +
                errs.front());
    }
    SemiLinearMap rho2 = tensor_rep(rho, rhop, b, v, vp);
    GradedBimonoid bt = translated_bimonoid(fd, b, top_degree, budget);
    GradedComonoid co = bt.comonoid();
    ProductComparison pc =
        product_comparison(fd, v.dim, vp.dim, top_degree, budget);

    GradedMorphism da = coaction_on(rho, co, pc.left, v.dim);
    GradedMorphism db = coaction_on(rhop, co, pc.right, vp.dim);
    GradedMorphism dboth = coaction_on(rho2, co, pc.source, v.dim * vp.dim);
    CorepReport ra = check_coaction(da, co, top_degree);
    if (!ra.pass) return {false, ra.degree, "left factor coaction: " + ra.witness};
    CorepReport rb = check_coaction(db, co, top_degree);
    if (!rb.pass)
        return {false, rb.degree, "right factor coaction: " + rb.witness};
    CorepReport rc = check_coaction(dboth, co, top_degree);
    if (!rc.pass)
        return {false, rc.degree, "tensor-lift coaction: " + rc.witness};
    GradedMorphism dtens = coaction_tensor(da, db, bt);
    CorepReport rt = check_coaction(dtens, co, top_degree);
    if (!rt.pass)
        return {false, rt.degree, "tensor-of-lifts coaction: " + rt.witness};

    // The product comparison on carriers intertwines the two coactions, in
    // both directions; with the comparison a degreewise bijection this is
    // an isomorphism of corepresentations.
    GradedMorphism lhs1 = dtens.compose(pc.phi);
    GradedMorphism rhs1 =
        degreewise_tensor(GradedMorphism::identity(bt.x), pc.phi,
                          dboth.target(), dtens.target())
            .compose(dboth);
    for (int k = 0; k <= top_degree; ++k)
        if (!(lhs1.at(k) == rhs1.at(k)))
            return {false, k,
                    "comparison square (forward) fails in degree " +
                        std::to_string(k)};
    GradedMorphism lhs2 = dboth.compose(*pc.phi_inverse);
    GradedMorphism rhs2 =
        degreewise_tensor(GradedMorphism::identity(bt.x), *pc.phi_inverse,
                          dtens.target(), dboth.target())
            .compose(dtens);
    for (int k = 0; k <= top_degree; ++k)
        if (!(lhs2.at(k) == rhs2.at(k)))
            return {false, k,
                    "comparison square (inverse) fails in degree " +
                        std::to_string(k)};
    return {};
}

}  // namespace maninkit
