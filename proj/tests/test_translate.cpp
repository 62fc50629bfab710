#include <string>
#include <vector>

#include "doctest.h"
#include "maninkit/quadalg.hpp"
#include "maninkit/translate.hpp"

using namespace maninkit;

namespace {

const Field kQ = Field::rationals();
const Field kF3 = Field::prime(3);

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Matrix mat(const Field& f, int rows, int cols,
           const std::vector<long long>& entries) {
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Scalar::of_int(f, entries[static_cast<std::size_t>(r) * cols + c]);
    return m;
}

SemiLinearMap one_point_map(const Matrix& fx) { return {{0}, {fx}, 1}; }

VecMonoid one_point_monoid(const Field& f, const Matrix& mu,
                           const Matrix& eta) {
    return {vect_slset(FinVec{f, mu.rows()}), one_point_map(mu),
            one_point_map(eta)};
}

/// K[t]/(t^2): basis (1, t), t nilpotent.
VecMonoid dual_numbers_monoid(const Field& f) {
    return one_point_monoid(f, mat(f, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0}),
                            mat(f, 2, 1, {1, 0}));
}

/// K x K: two orthogonal idempotents p, q with p + q the unit.
VecMonoid split_pair_monoid(const Field& f) {
    return one_point_monoid(f, mat(f, 2, 4, {1, 0, 0, 0, 0, 0, 0, 1}),
                            mat(f, 2, 1, {1, 1}));
}

/// The group algebra of the two-element group, basis (e, s), with the
/// diagonal comultiplication on group elements.
VecBimonoid sign_group_bimonoid(const Field& f) {
    VecMonoid m = one_point_monoid(f, mat(f, 2, 4, {1, 0, 0, 1, 0, 1, 1, 0}),
                                   mat(f, 2, 1, {1, 0}));
    return {m.x, m.mu, m.eta,
            one_point_map(mat(f, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1})),
            one_point_map(mat(f, 1, 2, {1, 1}))};
}

/// rho(e) = identity, rho(t) = the nilpotent shift E_{01} on the plane.
SemiLinearMap shift_rep(const Field& f) {
    return one_point_map(mat(f, 4, 2, {1, 0, 0, 1, 0, 0, 1, 0}));
}

}  // namespace

TEST_CASE("instance flags and the characteristic-two rejection") {
    MonoidalFunctorData t = tstar(kQ);
    CHECK(t.kind == SpaceFunctor::FreeDual);
    CHECK(t.strong);
    CHECK(t.contravariant);
    CHECK(t.symmetric);
    MonoidalFunctorData s = sstar(kQ);
    CHECK(s.kind == SpaceFunctor::SymmetricDual);
    CHECK(!s.strong);
    CHECK_NOTHROW(sstar(kF3));
    CHECK_THROWS_AS(sstar(Field::prime(2)), InputError);
    CHECK_THROWS_AS(functor_object(t, 0), InputError);
    CHECK(functor_object(t, 2).relations.dim() == 0);
    CHECK(functor_object(s, 2).relations.dim() == 1);
    CHECK(functor_object(s, 3).relations.dim() == 3);
    CHECK(functor_object(t, 1).labels == std::vector<std::string>({"x"}));
    CHECK(functor_object(s, 2).labels == std::vector<std::string>({"x", "y"}));
}

TEST_CASE("one-dimensional spaces map to the line under both instances") {
    for (auto fd : {tstar(kQ), sstar(kQ)}) {
        Budget budget;
        GradedAlgebraPtr a = truncate(functor_object(fd, 1), 4, budget);
        CHECK(a->dims() == std::vector<int>({1, 1, 1, 1, 1}));
    }
}

TEST_CASE("the free-dual comparison multiplies dimensions degreewise") {
    Budget budget;
    MonoidalFunctorData t = tstar(kQ);
    ProductComparison pc = product_comparison(t, 2, 2, 4, budget);
    for (int k = 0; k <= 4; ++k) {
        CHECK(pc.left->dim(k) == ipow(2, k));
        CHECK(pc.right->dim(k) == ipow(2, k));
        CHECK(pc.source->dim(k) == ipow(4, k));
        CHECK(pc.source->dim(k) == pc.left->dim(k) * pc.right->dim(k));
    }
    REQUIRE(pc.phi_inverse.has_value());
    for (int k = 0; k <= 4; ++k)
        CHECK(pc.phi_inverse->at(k) == pc.phi.at(k).transpose());
    for (int k = 0; k <= 2; ++k)
        CHECK(pc.phi_inverse->at(k) * pc.phi.at(k) ==
              Matrix::identity(kQ, pc.source->dim(k)));

    ProductComparison pc23 = product_comparison(t, 2, 3, 3, budget);
    for (int k = 0; k <= 3; ++k)
        CHECK(pc23.source->dim(k) == ipow(2, k) * ipow(3, k));
}

TEST_CASE("the arrow map reverses composites degreewise") {
    Matrix f = mat(kQ, 2, 2, {1, 2, 0, 1});
    Matrix g = mat(kQ, 2, 2, {1, 1, 1, 3});
    Matrix gf = g * f;
    for (auto fd : {tstar(kQ), sstar(kQ)}) {
        Budget budget;
        GradedAlgebraPtr fu = truncate(functor_object(fd, 2), 3, budget);
        GradedAlgebraPtr fv = truncate(functor_object(fd, 2), 3, budget);
        GradedAlgebraPtr fw = truncate(functor_object(fd, 2), 3, budget);
        GradedMorphism ff = functor_arrow_on(fd, f, fv, fu);
        GradedMorphism fg = functor_arrow_on(fd, g, fw, fv);
        GradedMorphism fgf = functor_arrow_on(fd, gf, fw, fu);
        GradedMorphism composite = ff.compose(fg);
        for (int k = 0; k <= 3; ++k) CHECK(fgf.at(k) == composite.at(k));
        GradedMorphism fid =
            functor_arrow_on(fd, Matrix::identity(kQ, 2), fv, fv);
        for (int k = 0; k <= 3; ++k)
            CHECK(fid.at(k) == Matrix::identity(kQ, fv->dim(k)));
    }
}

TEST_CASE("the symmetric-dual comparison is strictly colax from degree two") {
    Budget budget;
    MonoidalFunctorData s = sstar(kQ);
    ProductComparison pc = product_comparison(s, 2, 2, 3, budget);
    CHECK(!pc.phi_inverse.has_value());
    CHECK(pc.source->dim(1) == 4);
    CHECK(pc.phi.at(1).rank() == 4);
    CHECK(pc.source->dim(2) == 10);  // choose(5, 2)
    CHECK(pc.pair->dim(2) == 9);
    CHECK(pc.phi.at(2).rank() == 9);  // surjective, no longer injective

    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        Budget b2;
        ProductComparison q = product_comparison(s, n, m, 2, b2);
        CHECK(q.source->dim(2) == choose(n * m + 1, 2));
        CHECK(q.left->dim(2) == choose(n + 1, 2));
        CHECK(q.right->dim(2) == choose(m + 1, 2));
        CHECK(q.source->dim(2) > q.pair->dim(2));
        CHECK(q.phi.at(2).rank() == q.pair->dim(2));
    }
}

TEST_CASE("comparison coherence holds on sampled triples") {
    {
        Budget budget;
        auto faults = check_comparison_coherence(tstar(kQ), 2, 2, 2, 3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults = check_comparison_coherence(sstar(kQ), 2, 2, 2, 2, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults = check_comparison_coherence(sstar(kQ), 2, 1, 2, 3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
}

TEST_CASE("the four-factor interchange holds for the free-dual instance") {
    {
        Budget budget;
        auto faults =
            check_comparison_interchange(tstar(kQ), 2, 2, 2, 1, 3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults =
            check_comparison_interchange(tstar(kQ), 2, 1, 1, 2, 3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
}

TEST_CASE("the one-point trivial monoid translates to the trivial comonoid") {
    Budget budget;
    VecMonoid m = one_point_monoid(kQ, mat(kQ, 1, 1, {1}), mat(kQ, 1, 1, {1}));
    GradedComonoid c = translated_comonoid(tstar(kQ), m, 3, budget);
    CHECK(c.x->dims() == std::vector<int>({1, 1, 1, 1}));
    for (int k = 0; k <= 3; ++k) {
        CHECK(c.delta.at(k) == Matrix::identity(kQ, 1));
        CHECK(c.eps.at(k) == Matrix::identity(kQ, 1));
    }
}

TEST_CASE("the dual-numbers monoid translates to the comonoid dual to it") {
    VecMonoid m = dual_numbers_monoid(kQ);
    for (auto fd : {tstar(kQ), sstar(kQ)}) {
        Budget budget;
        GradedComonoid c = translated_comonoid(fd, m, 3, budget);
        // The degree-1 comultiplication is the transpose of the structure
        // constants: the dual of 1 is grouplike, the dual of t primitive.
        CHECK(c.delta.at(1) == m.mu.fx[0].transpose());
        CHECK(c.eps.at(1) == m.eta.fx[0].transpose());
        CHECK(c.delta.at(1) ==
              mat(kQ, 4, 2, {1, 0, 0, 1, 0, 1, 0, 0}));
        CHECK(check_comonoid(c.delta, c.eps, 3).empty());
    }
}

TEST_CASE("the translation of a tensor monoid factors through the comparison") {
    Budget budget;
    MonoidalFunctorData t = tstar(kQ);
    VecMonoid m = dual_numbers_monoid(kQ);
    Matrix mu2 = Matrix::kron(m.mu.fx[0], m.mu.fx[0]) *
                 middle_swap4(kQ, 2, 2, 2, 2);
    Matrix eta2 = Matrix::kron(m.eta.fx[0], m.eta.fx[0]);
    VecMonoid m2 = one_point_monoid(kQ, mu2, eta2);

    GradedComonoid c = translated_comonoid(t, m, 2, budget);
    GradedComonoid c2 = translated_comonoid(t, m2, 2, budget);
    ProductComparison pc = product_comparison(t, 2, 2, 2, budget);

    // Factorwise comonoid structure on the matched product of two copies.
    std::vector<Matrix> dmats, emats;
    for (int k = 0; k <= 2; ++k) {
        int dk = c.x->dim(k);
        dmats.push_back(middle_swap4(kQ, dk, dk, dk, dk) *
                        Matrix::kron(c.delta.at(k), c.delta.at(k)));
        emats.push_back(Matrix::kron(c.eps.at(k), c.eps.at(k)));
    }
    GradedAlgebraPtr line = truncate(functor_object(t, 1), 2, budget);
    GradedMorphism dpair(pc.pair, degreewise_product(pc.pair, pc.pair),
                         std::move(dmats));
    GradedMorphism epair(pc.pair, line, std::move(emats));
    auto faults = check_comonoid_morphism(pc.phi, c2.delta, c2.eps, dpair,
                                          epair, 2);
    for (const std::string& w : faults) INFO(w);
    CHECK(faults.empty());
}

TEST_CASE("the sign-group bimonoid translates to a graded bimonoid") {
    Budget budget;
    VecBimonoid zb = sign_group_bimonoid(kQ);
    GradedBimonoid bt = translated_bimonoid(tstar(kQ), zb, 3, budget);
    CHECK(bt.x->dims() == std::vector<int>({1, 2, 4, 8}));
    auto faults = check_bimonoid(bt, 3);
    for (const std::string& w : faults) INFO(w);
    CHECK(faults.empty());
    CHECK(bimonoid_is_commutative(bt, 3));

    CHECK_THROWS_AS(translated_bimonoid(sstar(kQ), zb, 2, budget), InputError);

    VecBimonoid broken = zb;
    broken.delta = one_point_map(mat(kQ, 4, 2, {1, 0, 0, 1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(translated_bimonoid(tstar(kQ), broken, 2, budget),
                    ValidationError);
}

TEST_CASE("the operator comparison is the identity on the line") {
    Budget budget;
    PhiTransform p = phi_transform(tstar(kQ), 1, 1, 3, budget);
    for (int k = 0; k <= 3; ++k) {
        CHECK(p.phi.at(k) == Matrix::identity(kQ, 1));
        CHECK(p.iso_by_degree[static_cast<std::size_t>(k)] == 1);
    }
}

TEST_CASE("the free-dual operator comparison reports bijective degrees") {
    Budget budget;
    PhiTransform p = phi_transform(tstar(kQ), 2, 2, 3, budget);
    CHECK(p.ch.hom_t->dims() == std::vector<int>({1, 4, 16, 64}));
    CHECK(p.image->dims() == std::vector<int>({1, 4, 16, 64}));
    CHECK(p.iso_by_degree == std::vector<char>({1, 1, 1, 1}));

    // Degree-1 index convention: the generator attached to the pair
    // (parameter i, target j) goes to the dual label of the operator
    // sending basis vector i to basis vector j.
    Budget b2;
    PhiTransform q = phi_transform(tstar(kQ), 2, 3, 2, b2);
    const Matrix& m1 = q.phi.at(1);
    REQUIRE(m1.rows() == 6);
    REQUIRE(m1.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int h = 0; h < 6; ++h)
                CHECK(m1.at(h, i * 3 + j) ==
                      (h == j * 2 + i ? Scalar::one(kQ) : Scalar::zero(kQ)));
}

TEST_CASE("the symmetric-dual operator comparison loses injectivity") {
    Budget budget;
    PhiTransform p = phi_transform(sstar(kQ), 2, 2, 3, budget);
    CHECK(p.ch.hom_t->dim(0) == 1);
    CHECK(p.ch.hom_t->dim(1) == 4);
    CHECK(p.ch.hom_t->dim(2) == 13);
    CHECK(p.image->dim(2) == 10);
    CHECK(p.iso_by_degree[0] == 1);
    CHECK(p.iso_by_degree[1] == 1);
    CHECK(p.iso_by_degree[2] == 0);
    CHECK(p.iso_by_degree[3] == 0);
}

TEST_CASE("the operator comparison is natural in both slots") {
    {
        Budget budget;
        auto faults = check_phi_naturality(
            tstar(kQ), mat(kQ, 2, 2, {1, 2, 0, 1}), mat(kQ, 2, 2, {1, 1, 1, 3}),
            3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults = check_phi_naturality(tstar(kQ), mat(kQ, 2, 1, {1, 2}),
                                           mat(kQ, 1, 2, {1, 3}), 3, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults = check_phi_naturality(
            sstar(kQ), mat(kQ, 2, 2, {1, 1, 0, 1}), mat(kQ, 2, 2, {1, 0, 1, 1}),
            2, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
    {
        Budget budget;
        auto faults = check_phi_naturality(sstar(kQ), mat(kQ, 2, 1, {1, 1}),
                                           mat(kQ, 1, 2, {2, 1}), 2, budget);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
    }
}

TEST_CASE("the comparison at equal slots is a morphism of comonoids") {
    {
        Budget budget;
        EndComparison ec = end_comparison(tstar(kQ), 1, 3, budget);
        CHECK(check_end_comparison(ec, 3).empty());
        for (int k = 0; k <= 3; ++k) {
            CHECK(ec.phi.at(k) == Matrix::identity(kQ, 1));
            CHECK(ec.iso_by_degree[static_cast<std::size_t>(k)] == 1);
        }
    }
    {
        Budget budget;
        EndComparison ec = end_comparison(tstar(kQ), 2, 2, budget);
        auto faults = check_end_comparison(ec, 2);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
        CHECK(ec.iso_by_degree == std::vector<char>({1, 1, 1}));

        // A rescaled comparison stops being one: the counit square breaks.
        std::vector<Matrix> mats;
        for (int k = 0; k <= 2; ++k) mats.push_back(ec.phi.at(k));
        mats[1] = mats[1].scaled(Scalar::of_int(kQ, 2));
        GradedMorphism bad(ec.phi.source(), ec.phi.target(), std::move(mats));
        CHECK(!check_comonoid_morphism(bad, ec.source.d, ec.source.v,
                                       ec.target.delta, ec.target.eps, 2)
                   .empty());
    }
    {
        Budget budget;
        EndComparison ec = end_comparison(sstar(kQ), 2, 2, budget);
        auto faults = check_end_comparison(ec, 2);
        for (const std::string& w : faults) INFO(w);
        CHECK(faults.empty());
        CHECK(ec.source.ch.hom_t->dims() == std::vector<int>({1, 4, 13}));
        CHECK(ec.target.x->dims() == std::vector<int>({1, 4, 10}));
        CHECK(ec.iso_by_degree == std::vector<char>({1, 1, 0}));
    }
}

TEST_CASE("the trivial representation lifts to the trivial corepresentation") {
    Budget budget;
    VecMonoid m = one_point_monoid(kQ, mat(kQ, 1, 1, {1}), mat(kQ, 1, 1, {1}));
    Corepresentation lift = lift_rep(tstar(kQ), one_point_map(mat(kQ, 1, 1, {1})),
                                     m, FinVec{kQ, 1}, 3, budget);
    for (int k = 0; k <= 3; ++k)
        CHECK(lift.omega.at(k) == Matrix::identity(kQ, 1));
    CHECK(corep_check(lift, 3).pass);
}

TEST_CASE("the shift representation of the dual numbers lifts") {
    Budget budget;
    MonoidalFunctorData t = tstar(kQ);
    VecMonoid m = dual_numbers_monoid(kQ);
    SemiLinearMap rho = shift_rep(kQ);
    FinVec v{kQ, 2};
    GradedComonoid co = translated_comonoid(t, m, 3, budget);
    Corepresentation lift = lift_rep(t, rho, m, v, co, 3, budget);
    CorepReport rep = corep_check(lift, 3);
    INFO(rep.witness);
    CHECK(rep.pass);

    // The same lift through the coaction route, with the frozen degree-1
    // reindexing of the representation matrix.
    GradedMorphism d = lift_coaction(t, rho, m, v, co, 3, budget);
    CHECK(d.at(1) == mat(kQ, 4, 2, {1, 0, 0, 1, 0, 0, 1, 0}));
    GradedMorphism via_omega = coaction_from_corep(lift);
    for (int k = 0; k <= 3; ++k) CHECK(d.at(k) == via_omega.at(k));
}

TEST_CASE("the split-pair representation lifts under both instances") {
    Matrix diag = mat(kQ, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
    VecMonoid m = split_pair_monoid(kQ);
    {
        Budget budget;
        GradedComonoid co = translated_comonoid(tstar(kQ), m, 3, budget);
        // Both dual generators are grouplike.
        CHECK(co.delta.at(1) == mat(kQ, 4, 2, {1, 0, 0, 0, 0, 0, 0, 1}));
        Corepresentation lift = lift_rep(tstar(kQ), one_point_map(diag), m,
                                         FinVec{kQ, 2}, co, 3, budget);
        CHECK(corep_check(lift, 3).pass);
    }
    {
        Budget budget;
        Corepresentation lift = lift_rep(sstar(kQ), one_point_map(diag), m,
                                         FinVec{kQ, 2}, 2, budget);
        CHECK(corep_check(lift, 2).pass);
    }
}

TEST_CASE("representation morphisms lift contravariantly") {
    Budget budget;
    MonoidalFunctorData t = tstar(kQ);
    VecMonoid m = dual_numbers_monoid(kQ);
    SemiLinearMap rho = shift_rep(kQ);
    SemiLinearMap tau = one_point_map(mat(kQ, 1, 2, {1, 0}));
    FinVec v2{kQ, 2}, v1{kQ, 1};
    Matrix f = mat(kQ, 1, 2, {0, 1});  // plane -> line intertwiner
    Matrix g = mat(kQ, 2, 1, {1, 0});  // line -> plane intertwiner
    CHECK(rep_morphism_check(f, rho, tau, m, v2, v1).empty());
    CHECK(rep_morphism_check(g, tau, rho, m, v1, v2).empty());

    GradedComonoid co = translated_comonoid(t, m, 3, budget);
    Corepresentation lr = lift_rep(t, rho, m, v2, co, 3, budget);
    Corepresentation lt = lift_rep(t, tau, m, v1, co, 3, budget);
    CorepReport fwd = corep_morphism_check(f.transpose(), lt, lr, 3, budget);
    INFO(fwd.witness);
    CHECK(fwd.pass);
    CorepReport bwd = corep_morphism_check(g.transpose(), lr, lt, 3, budget);
    INFO(bwd.witness);
    CHECK(bwd.pass);

    // A non-intertwiner must fail the corepresentation square.
    CorepReport bad =
        corep_morphism_check(mat(kQ, 1, 2, {0, 1}), lr, lt, 3, budget);
    CHECK(!bad.pass);
    CHECK(!bad.witness.empty());

    // A map that is not a representation is rejected before lifting.
    SemiLinearMap not_rep =
        one_point_map(mat(kQ, 4, 2, {1, 0, 0, 1, 0, 1, 1, 0}));
    CHECK_THROWS_AS(lift_rep(t, not_rep, m, v2, co, 3, budget),
                    ValidationError);
}

TEST_CASE("the unit clause of lift monoidality holds") {
    Budget budget;
    VecBimonoid zb = sign_group_bimonoid(kQ);
    LiftMonoidalityReport r = verify_lift_unit(tstar(kQ), zb, 3, budget);
    INFO(r.witness);
    CHECK(r.pass);
    CHECK_THROWS_AS(verify_lift_unit(sstar(kQ), zb, 2, budget), InputError);
}

TEST_CASE("lifting is monoidal on the sign-group bimonoid over the rationals") {
    MonoidalFunctorData t = tstar(kQ);
    VecBimonoid zb = sign_group_bimonoid(kQ);
    VecMonoid m = zb.monoid();
    FinVec line{kQ, 1};
    SemiLinearMap sign = one_point_map(mat(kQ, 1, 2, {1, -1}));
    SemiLinearMap triv = one_point_map(mat(kQ, 1, 2, {1, 1}));
    {
        Budget budget;
        LiftMonoidalityReport r =
            verify_lift_monoidality(t, zb, sign, line, sign, line, 3, budget);
        INFO(r.witness);
        CHECK(r.pass);
    }
    {
        Budget budget;
        LiftMonoidalityReport r =
            verify_lift_monoidality(t, zb, sign, line, triv, line, 3, budget);
        INFO(r.witness);
        CHECK(r.pass);
    }
    {
        // The same comparison through the full tensor corepresentation.
        Budget budget;
        GradedBimonoid bt = translated_bimonoid(t, zb, 3, budget);
        GradedComonoid co = bt.comonoid();
        Corepresentation la = lift_rep(t, sign, m, line, co, 3, budget);
        Corepresentation lb = lift_rep(t, sign, m, line, co, 3, budget);
        Corepresentation both = tensor_corep(la, lb, bt, budget);
        CHECK(corep_check(both, 3).pass);
        SemiLinearMap rho2 = tensor_rep(sign, sign, zb, line, line);
        CHECK(rho2.fx[0] == mat(kQ, 1, 2, {1, 1}));  // sign times sign
        Corepresentation lifted2 = lift_rep(t, rho2, m, line, co, 3, budget);
        Matrix id1 = Matrix::identity(kQ, 1);
        CorepReport fwd = corep_morphism_check(id1, lifted2, both, 3, budget);
        INFO(fwd.witness);
        CHECK(fwd.pass);
        CorepReport bwd = corep_morphism_check(id1, both, lifted2, 3, budget);
        INFO(bwd.witness);
        CHECK(bwd.pass);
    }
    {
        Budget budget;
        SemiLinearMap bad = one_point_map(mat(kQ, 1, 2, {1, 2}));
        CHECK_THROWS_AS(
            verify_lift_monoidality(t, zb, bad, line, sign, line, 2, budget),
            ValidationError);
    }
}

TEST_CASE("lifting is monoidal for two-dimensional carriers over F_3") {
    Budget budget;
    MonoidalFunctorData t = tstar(kF3);
    VecBimonoid zb = sign_group_bimonoid(kF3);
    // The regular representation and the diagonal sign representation.
    SemiLinearMap reg =
        one_point_map(mat(kF3, 4, 2, {1, 0, 0, 1, 0, 1, 1, 0}));
    SemiLinearMap diag =
        one_point_map(mat(kF3, 4, 2, {1, 1, 0, 0, 0, 0, 1, 2}));
    FinVec v{kF3, 2};
    LiftMonoidalityReport r =
        verify_lift_monoidality(t, zb, reg, v, diag, v, 3, budget);
    INFO(r.witness);
    CHECK(r.pass);
}
