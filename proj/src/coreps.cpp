#include "maninkit/coreps.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace maninkit {

namespace {

std::string vec_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

/// First column where the two matrices differ, or -1.
int first_diff_col(const Matrix& a, const Matrix& b) {
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            if (a.at(r, c) != b.at(r, c)) return c;
    return -1;
}

CorepReport fail_vec(int k, const std::string& square, const Vec& diff,
                     const std::string& col_label) {
    CorepReport rep;
    rep.pass = false;
    rep.degree = k;
    rep.witness = square + " fails in degree " + std::to_string(k) +
                  " at column " + col_label + ": difference " +
                  vec_string(diff);
    return rep;
}

CorepReport fail_report(int k, const std::string& square, const Matrix& lhs,
                        const Matrix& rhs, int col,
                        const std::string& col_label) {
    Vec diff(static_cast<std::size_t>(lhs.rows()),
             Scalar::zero(lhs.field()));
    for (int r = 0; r < lhs.rows(); ++r)
        diff[static_cast<std::size_t>(r)] = lhs.at(r, col) - rhs.at(r, col);
    return fail_vec(k, square, diff, col_label);
}

bool all_zero(const Vec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

/// The permutation of X_k (x) X_k that swaps the factors.
Matrix factor_swap(const Field& f, int d) {
    Matrix sw(f, d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            sw.at(b * d + a, a * d + b) = Scalar::one(f);
    return sw;
}

GradedMorphism extend_or_die(const GradedAlgebraPtr& source,
                             const GradedAlgebraPtr& target, const Matrix& f1,
                             const char* what) {
    auto res = morphism_from_degree1(source, target, f1);
    if (!res.morphism)
        throw InternalError(std::string(what) +
                            " failed to extend: " + res.witness);
    return *res.morphism;
}

}  // namespace

GradedComonoid comonoid_of_coend(const CoendComonoid& e) {
    return {e.ch.hom_t, e.d, e.v};
}

std::vector<std::string> check_bimonoid(const GradedBimonoid& bi, int degree) {
    std::vector<std::string> bad = check_comonoid(bi.delta, bi.eps, degree);
    const Field& f = bi.x->field();
    int top = std::min({degree, bi.mu.top_degree(), bi.eta.top_degree(),
                        bi.delta.top_degree(), bi.eps.top_degree()});
    for (int k = 0; k <= top; ++k) {
        int d = bi.x->dim(k);
        const Matrix& mu = bi.mu.at(k);
        const Matrix& eta = bi.eta.at(k);
        const Matrix& dl = bi.delta.at(k);
        const Matrix& ep = bi.eps.at(k);
        Matrix id = Matrix::identity(f, d);
        if (!(mu * Matrix::kron(mu, id) == mu * Matrix::kron(id, mu)))
            bad.push_back("multiplication is not associative in degree " +
                          std::to_string(k));
        if (!(mu * Matrix::kron(eta, id) == id) ||
            !(mu * Matrix::kron(id, eta) == id))
            bad.push_back("unit law fails in degree " + std::to_string(k));
        Matrix lhs = dl * mu;
        Matrix rhs = Matrix::kron(mu, mu) *
                     middle_swap4(f, d, d, d, d) * Matrix::kron(dl, dl);
        if (!(lhs == rhs))
            bad.push_back(
                "comultiplication does not respect products in degree " +
                std::to_string(k));
        if (!(ep * mu == Matrix::kron(ep, ep)))
            bad.push_back("counit does not respect products in degree " +
                          std::to_string(k));
        if (!(dl * eta == Matrix::kron(eta, eta)))
            bad.push_back("comultiplication does not fix the unit in degree " +
                          std::to_string(k));
        if (!(ep * eta == Matrix::identity(f, 1)))
            bad.push_back("counit does not fix the unit in degree " +
                          std::to_string(k));
    }
    auto tag = [&bad](const char* name, std::vector<std::string> faults) {
        for (const std::string& w : faults)
            bad.push_back(std::string(name) + ": " + w);
    };
    tag("mu", check_algebra_morphism(bi.mu));
    tag("eta", check_algebra_morphism(bi.eta));
    tag("delta", check_algebra_morphism(bi.delta));
    tag("eps", check_algebra_morphism(bi.eps));
    return bad;
}

bool bimonoid_is_commutative(const GradedBimonoid& bi, int degree) {
    const Field& f = bi.x->field();
    int top = std::min(degree, bi.mu.top_degree());
    for (int k = 0; k <= top; ++k) {
        const Matrix& mu = bi.mu.at(k);
        if (!(mu * factor_swap(f, bi.x->dim(k)) == mu)) return false;
    }
    return true;
}

GradedBimonoid trivial_bimonoid(const Field& f, int top_degree,
                                Budget& budget) {
    GradedAlgebraPtr x = truncate(polynomial_line(f), top_degree, budget);
    GradedAlgebraPtr xx = degreewise_product(x, x);
    std::vector<Matrix> ones;
    for (int k = 0; k <= top_degree; ++k)
        ones.push_back(Matrix::identity(f, 1));
    GradedMorphism mu(xx, x, ones);
    GradedMorphism delta(x, xx, ones);
    GradedMorphism id = GradedMorphism::identity(x);
    return {x, std::move(mu), id, std::move(delta), id};
}

GradedBimonoid parity_bimonoid(const Field& f, int top_degree,
                               Budget& budget) {
    std::vector<Vec> rel_rows;
    // ee - ss and es - se.
    Vec r1(4, Scalar::zero(f)), r2(4, Scalar::zero(f));
    r1[0] = Scalar::one(f);
    r1[3] = -Scalar::one(f);
    r2[1] = Scalar::one(f);
    r2[2] = -Scalar::one(f);
    rel_rows.push_back(r1);
    rel_rows.push_back(r2);
    QuadraticAlgebra pres = QuadraticAlgebra::make(
        f, {"e", "s"}, Subspace::span(f, rel_rows, 4));
    GradedAlgebraPtr x = truncate(pres, top_degree, budget);
    GradedAlgebraPtr unit = truncate(polynomial_line(f), top_degree, budget);
    GradedAlgebraPtr xx = degreewise_product(x, x);

    Matrix delta1(f, 4, 2);
    delta1.at(0, 0) = Scalar::one(f);  // e -> e (x) e
    delta1.at(3, 1) = Scalar::one(f);  // s -> s (x) s
    GradedMorphism delta = extend_or_die(x, xx, delta1,
                                         "parity comultiplication");
    Matrix eps1(f, 1, 2);
    eps1.at(0, 0) = Scalar::one(f);
    eps1.at(0, 1) = Scalar::one(f);
    GradedMorphism eps = extend_or_die(x, unit, eps1, "parity counit");
    Matrix eta1(f, 2, 1);
    eta1.at(0, 0) = Scalar::one(f);  // u -> e
    GradedMorphism eta = extend_or_die(unit, x, eta1, "parity unit");

    std::vector<Matrix> mu_mats;
    for (int k = 0; k <= top_degree; ++k) {
        int d = x->dim(k);
        Matrix m(f, d, d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                int p = (parity_of_class(*x, k, a) +
                         parity_of_class(*x, k, b)) % 2;
                for (int c = 0; c < d; ++c)
                    if (parity_of_class(*x, k, c) == p)
                        m.at(c, a * d + b) = Scalar::one(f);
            }
        mu_mats.push_back(std::move(m));
    }
    GradedMorphism mu(xx, x, std::move(mu_mats));
    return {x, std::move(mu), std::move(eta), std::move(delta),
            std::move(eps)};
}

int parity_of_class(const GradedAlgebra& x, int k, int index) {
    if (k == 0) return 0;
    int n = static_cast<int>(x.degree1_labels().size());
    long long col = x.levels().monomials[k][index];
    int parity = 0;
    for (int pos = 0; pos < k; ++pos) {
        parity += static_cast<int>(col % n);
        col /= n;
    }
    return parity % 2;
}

Corepresentation identity_corep(const QuadraticAlgebra& b, int top_degree,
                                Budget& budget) {
    CoendComonoid e = coend_comonoid(b, top_degree, budget);
    GradedComonoid co = comonoid_of_coend(e);
    GradedMorphism omega = GradedMorphism::identity(e.ch.hom_t);
    return {b, std::move(e), std::move(co), std::move(omega)};
}

Corepresentation trivial_corep(const QuadraticAlgebra& b,
                               const GradedComonoid& co, int top_degree,
                               Budget& budget) {
    for (int k = 0; k <= co.x->top_degree(); ++k)
        if (co.x->dim(k) != 1)
            throw InputError("trivial_corep needs an all-dims-one comonoid");
    CoendComonoid e = coend_comonoid(b, top_degree, budget);
    int top = std::min(e.ch.hom_t->top_degree(), co.x->top_degree());
    std::vector<Matrix> mats;
    for (int k = 0; k <= top; ++k) mats.push_back(e.v.at(k));
    GradedMorphism omega(e.ch.hom_t, co.x, std::move(mats));
    return {b, std::move(e), co, std::move(omega)};
}

Corepresentation unit_corep(const GradedBimonoid& bi, int top_degree,
                            Budget& budget) {
    const Field& f = bi.x->field();
    QuadraticAlgebra line = polynomial_line(f);
    CoendComonoid e = coend_comonoid(line, top_degree, budget);
    int top = std::min(e.ch.hom_t->top_degree(), bi.x->top_degree());
    std::vector<Matrix> mats;
    for (int k = 0; k <= top; ++k)
        mats.push_back(bi.eta.at(k) * e.v.at(k));
    GradedMorphism omega(e.ch.hom_t, bi.x, std::move(mats));
    return {line, std::move(e), bi.comonoid(), std::move(omega)};
}

CorepReport corep_check(const Corepresentation& c, int degree) {
    const GradedAlgebraPtr& ealg = c.e.ch.hom_t;
    const GradedMorphism& w = c.omega;
    if (!(ealg->field() == c.co.x->field()))
        throw FieldMismatchError("corep_check across fields");
    if (w.source()->dims() != ealg->dims() ||
        w.target()->dims() != c.co.x->dims())
        throw InputError(
            "corep_check: omega does not run from coend(B) to the comonoid");
    const Field& f = ealg->field();
    int top = std::min({degree, w.top_degree(), c.e.d.top_degree(),
                        c.e.v.top_degree(), c.co.delta.top_degree(),
                        c.co.eps.top_degree()});
    // omega must be a morphism of graded algebras before the comonoid
    // squares are meaningful: unit preservation, then the multiplication
    // splits in ascending total degree.
    {
        Matrix one = Matrix::identity(f, 1);
        int col = first_diff_col(w.at(0), one);
        if (col >= 0)
            return fail_report(0, "unit preservation", w.at(0), one, col,
                               ealg->basis_label(0, col));
    }
    for (int k = 2; k <= top; ++k)
        for (int i = 1; i < k; ++i) {
            int j = k - i;
            Matrix l2 = w.at(k) * ealg->mult(i, j);
            Matrix r2 = c.co.x->mult(i, j) * Matrix::kron(w.at(i), w.at(j));
            int col = first_diff_col(l2, r2);
            if (col >= 0) {
                int a = col / ealg->dim(j), b = col % ealg->dim(j);
                return fail_report(
                    k,
                    "multiplicativity on the (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") split",
                    l2, r2, col,
                    ealg->basis_label(i, a) + "." + ealg->basis_label(j, b));
            }
        }
    for (int k = 0; k <= top; ++k) {
        // Comultiplication square, columnwise: (w (x) w) d is expanded
        // through the sparse columns of d, never as a dense Kronecker
        // square.
        int ek = ealg->dim(k);
        Matrix lhs = c.co.delta.at(k) * w.at(k);
        for (int j = 0; j < ek; ++j) {
            SparseVec y = sparse_apply_right(
                w.at(k), sparse_apply_left(w.at(k), ek,
                                           sparse_column(c.e.d.at(k), j)));
            Vec diff = lhs.col(j);
            for (const auto& [pos, val] : y)
                diff[static_cast<std::size_t>(pos)] -= val;
            if (!all_zero(diff))
                return fail_vec(k, "comultiplication square", diff,
                                ealg->basis_label(k, j));
        }
        lhs = c.co.eps.at(k) * w.at(k);
        Matrix rhs = c.e.v.at(k);
        int col = first_diff_col(lhs, rhs);
        if (col >= 0)
            return fail_report(k, "counit square", lhs, rhs, col,
                               ealg->basis_label(k, col));
    }
    return {};
}

GradedMorphism coaction_from_corep(const Corepresentation& c) {
    return vartheta(c.e.ch, c.omega);
}

Corepresentation corep_from_coaction(const CoendComonoid& e,
                                     const GradedComonoid& co,
                                     const Matrix& delta1) {
    GradedMorphism omega = vartheta_inverse(e.ch, co.x, delta1);
    return {e.ch.target, e, co, std::move(omega)};
}

CorepReport check_coaction(const GradedMorphism& delta,
                           const GradedComonoid& co, int degree) {
    const GradedAlgebraPtr& b = delta.source();
    const Field& f = b->field();
    if (!(f == co.x->field()))
        throw FieldMismatchError("check_coaction across fields");
    int top = std::min({degree, delta.top_degree(), co.delta.top_degree(),
                        co.eps.top_degree()});
    for (int k = 0; k <= top; ++k)
        if (delta.target()->dim(k) != co.x->dim(k) * b->dim(k))
            throw InputError("check_coaction: delta does not land in X ∘ B");
    for (int k = 0; k <= top; ++k) {
        int dx = co.x->dim(k), db = b->dim(k);
        Matrix idb = Matrix::identity(f, db);
        // Coassociativity, columnwise: both routes are pushed through the
        // sparse columns of delta rather than dense Kronecker blocks.
        for (int j = 0; j < db; ++j) {
            SparseVec x = sparse_column(delta.at(k), j);
            SparseVec l = sparse_apply_left(co.delta.at(k), db, x);
            SparseVec r = sparse_apply_right(delta.at(k), x);
            for (const auto& [pos, val] : r) sparse_add(l, pos, -val);
            if (!l.empty()) {
                Vec diff(static_cast<std::size_t>(dx) * dx * db,
                         Scalar::zero(f));
                for (const auto& [pos, val] : l)
                    diff[static_cast<std::size_t>(pos)] = val;
                return fail_vec(k, "coassociativity square", diff,
                                b->basis_label(k, j));
            }
        }
        Matrix lhs = Matrix::kron(co.eps.at(k), idb) * delta.at(k);
        int col = first_diff_col(lhs, idb);
        if (col >= 0)
            return fail_report(k, "counit square", lhs, idb, col,
                               b->basis_label(k, col));
    }
    return {};
}

CorepReport corep_morphism_check(const Matrix& f1, const Corepresentation& src,
                                 const Corepresentation& dst, int degree,
                                 Budget& budget) {
    if (src.co.x != dst.co.x)
        throw InputError(
            "corep_morphism_check needs a common comonoid target");
    auto carrier =
        morphism_from_degree1(src.e.ch.target_t, dst.e.ch.target_t, f1);
    if (!carrier.morphism) {
        CorepReport rep;
        rep.pass = false;
        rep.degree = 2;
        rep.witness =
            "carrier map rejected before the square test: " + carrier.witness;
        return rep;
    }
    int depth = std::min({degree, src.omega.top_degree(),
                          dst.omega.top_degree()});
    CohomObject mixed = cohom(dst.b, src.b, depth, budget);
    GradedMorphism left = cohom_map_parameter(mixed, src.e.ch, f1);
    GradedMorphism right = cohom_map_target(mixed, dst.e.ch, f1);
    GradedMorphism lhs = src.omega.compose(left);
    GradedMorphism rhs = dst.omega.compose(right);
    int top = std::min({depth, lhs.top_degree(), rhs.top_degree()});
    for (int k = 0; k <= top; ++k) {
        int col = first_diff_col(lhs.at(k), rhs.at(k));
        if (col >= 0)
            return fail_report(k, "corepresentation square", lhs.at(k),
                               rhs.at(k), col,
                               mixed.hom_t->basis_label(k, col));
    }
    return {};
}

Corepresentation tensor_corep(const Corepresentation& a,
                              const Corepresentation& ap,
                              const GradedBimonoid& bi, Budget& budget) {
    if (a.co.x != bi.x || ap.co.x != bi.x)
        throw InputError(
            "tensor_corep: corepresentations act through a different "
            "bimonoid");
    int top = std::min(a.omega.top_degree(), ap.omega.top_degree());
    KappaData kd = kappa(a.b, ap.b, a.b, ap.b, top, budget);
    GradedMorphism pair =
        degreewise_tensor(a.omega, ap.omega, kd.z, bi.mu.source());
    GradedMorphism omega = bi.mu.compose(pair).compose(kd.kappa);
    // The tensor coend's cocomposition is tabulated densely; charge for its
    // degreewise blocks before building them.
    long long work = 0;
    for (int k = 0; k <= kd.big.hom_t->top_degree(); ++k) {
        long long d = kd.big.hom_t->dim(k);
        work += d * d * d;
    }
    budget.charge(work);
    CoendComonoid e{kd.big, cocomposition_from_parts(kd.big, kd.big, kd.big),
                    counit_v(kd.big, budget)};
    return {kd.big.parameter, std::move(e), bi.comonoid(), std::move(omega)};
}

GradedMorphism coaction_tensor(const GradedMorphism& d,
                               const GradedMorphism& dp,
                               const GradedBimonoid& bi) {
    const Field& f = bi.x->field();
    GradedAlgebraPtr zz = degreewise_product(d.source(), dp.source());
    GradedAlgebraPtr tgt = degreewise_product(bi.x, zz);
    int top = std::min({tgt->top_degree(), d.top_degree(), dp.top_degree(),
                        bi.mu.top_degree()});
    for (int k = 0; k <= top; ++k) {
        if (d.target()->dim(k) != bi.x->dim(k) * d.source()->dim(k) ||
            dp.target()->dim(k) != bi.x->dim(k) * dp.source()->dim(k))
            throw InputError(
                "coaction_tensor: coactions do not land in X ∘ B");
    }
    std::vector<Matrix> mats;
    for (int k = 0; k <= top; ++k) {
        int dx = bi.x->dim(k);
        int db = d.source()->dim(k), dbp = dp.source()->dim(k);
        const Matrix& dk = d.at(k);
        const Matrix& dpk = dp.at(k);
        Matrix m(f, dx * db * dbp, db * dbp);
        for (int j1 = 0; j1 < db; ++j1)
            for (int j2 = 0; j2 < dbp; ++j2) {
                SparseVec col;
                for (int r1 = 0; r1 < dk.rows(); ++r1) {
                    if (dk.at(r1, j1).is_zero()) continue;
                    for (int r2 = 0; r2 < dpk.rows(); ++r2) {
                        if (dpk.at(r2, j2).is_zero()) continue;
                        sparse_add(col,
                                   static_cast<long long>(r1) * dpk.rows() +
                                       r2,
                                   dk.at(r1, j1) * dpk.at(r2, j2));
                    }
                }
                SparseVec swapped =
                    sparse_middle_swap(dx, db, dx, dbp, col);
                SparseVec out = sparse_apply_left(
                    bi.mu.at(k), static_cast<long long>(db) * dbp, swapped);
                for (const auto& [idx, val] : out)
                    m.at(static_cast<int>(idx), j1 * dbp + j2) = val;
            }
        mats.push_back(std::move(m));
    }
    return GradedMorphism(zz, tgt, std::move(mats));
}

}  // namespace maninkit
