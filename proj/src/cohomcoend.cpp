#include "maninkit/cohomcoend.hpp"

#include <algorithm>
#include <map>

namespace maninkit {

namespace {

bool same_presentation(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
    return a.field == b.field && a.labels == b.labels &&
           a.relations == b.relations;
}

/// f1[s, i*nB + j] = g1[s*nA + i, j].
Matrix transpose_under_pairing(const Matrix& g1, int z1, int na, int nb) {
    Matrix f1(g1.field(), z1, na * nb);
    for (int s = 0; s < z1; ++s)
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                f1.at(s, i * nb + j) = g1.at(s * na + i, j);
    return f1;
}

}  // namespace

CohomObject cohom(const QuadraticAlgebra& a, const QuadraticAlgebra& b,
                  int top_degree, Budget& budget) {
    if (!(a.field == b.field))
        throw FieldMismatchError("cohom arguments over different fields");
    const Field& f = a.field;
    QuadraticAlgebra alg = black_product(quadratic_dual(a), b);
    GradedAlgebraPtr hom_t = truncate(alg, top_degree, budget);
    GradedAlgebraPtr parameter_t = truncate(a, top_degree, budget);
    GradedAlgebraPtr target_t = truncate(b, top_degree, budget);
    GradedAlgebraPtr product = degreewise_product(hom_t, parameter_t);

    int na = a.num_generators(), nb = b.num_generators();
    Matrix c1(f, na * nb * na, nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            c1.at((i * nb + j) * na + i, j) = Scalar::one(f);
    auto res = morphism_from_degree1(target_t, product, c1);
    if (!res.morphism)
        throw InternalError("coevaluation failed to extend: " + res.witness);
    return CohomObject{a,       b,        std::move(alg), hom_t,
                       parameter_t, target_t, product,        *res.morphism};
}

GradedMorphism vartheta(const CohomObject& ch, const GradedMorphism& f) {
    if (f.source()->dims() != ch.hom_t->dims())
        throw DimensionError("vartheta: morphism does not start at the cohom");
    GradedAlgebraPtr za = degreewise_product(f.target(), ch.parameter_t);
    GradedMorphism lift = degreewise_tensor(
        f, GradedMorphism::identity(ch.parameter_t), ch.product, za);
    return lift.compose(ch.coev);
}

GradedMorphism vartheta_inverse(const CohomObject& ch,
                                const GradedAlgebraPtr& z, const Matrix& g1) {
    int na = ch.parameter.num_generators();
    int nb = ch.target.num_generators();
    if (g1.rows() != z->dim(1) * na || g1.cols() != nb)
        throw DimensionError("vartheta_inverse: degree-1 shape mismatch");
    Matrix f1 = transpose_under_pairing(g1, z->dim(1), na, nb);
    auto res = morphism_from_degree1(ch.hom_t, z, f1);
    if (!res.morphism)
        throw ValidationError(
            "transposed degree-1 data does not preserve relations: " +
            res.witness);
    return *res.morphism;
}

GradedMorphism cohom_map_target(const CohomObject& from, const CohomObject& to,
                                const Matrix& g1) {
    if (!same_presentation(from.parameter, to.parameter))
        throw InputError("cohom_map_target needs a common parameter");
    int na = from.parameter.num_generators();
    if (g1.rows() != to.target.num_generators() ||
        g1.cols() != from.target.num_generators())
        throw DimensionError("cohom_map_target: degree-1 shape mismatch");
    Matrix f1 = Matrix::kron(Matrix::identity(g1.field(), na), g1);
    auto res = morphism_from_degree1(from.hom_t, to.hom_t, f1);
    if (!res.morphism)
        throw ValidationError("induced cohom map does not preserve relations: " +
                              res.witness);
    return *res.morphism;
}

GradedMorphism cohom_map_parameter(const CohomObject& from,
                                   const CohomObject& to, const Matrix& f1) {
    if (!same_presentation(from.target, to.target))
        throw InputError("cohom_map_parameter needs a common target");
    if (f1.rows() != from.parameter.num_generators() ||
        f1.cols() != to.parameter.num_generators())
        throw DimensionError("cohom_map_parameter: degree-1 shape mismatch");
    // Transpose f through the adjunction: the image of the universal map
    // under hom(-, B) composed with the coevaluation of the destination.
    Matrix g1 =
        Matrix::kron(Matrix::identity(f1.field(), to.hom_t->dim(1)), f1) *
        to.coev.degree1();
    return vartheta_inverse(from, to.hom_t, g1);
}

std::vector<Matrix> enumerate_morphisms(const GradedAlgebraPtr& source,
                                        const GradedAlgebraPtr& target,
                                        Budget& budget) {
    const Field& f = source->field();
    if (!(f == target->field()))
        throw FieldMismatchError("morphism enumeration across fields");
    if (!f.is_prime_field())
        throw InputError("morphism enumeration needs a finite prime field");
    const Subspace& rel = source->presentation().relations;
    long long p = f.p();
    int rows = target->dim(1), cols = source->dim(1);
    int entries = rows * cols;

    long long room = budget.limit() - budget.used();
    long long count = 1;
    for (int e = 0; e < entries; ++e) {
        if (count > room) break;
        count *= p;
    }
    budget.charge(count);  // throws when the space itself is oversized

    const Matrix& m11 = target->mult(1, 1);
    int ns = source->dim(1);
    std::vector<Matrix> out;
    std::vector<int> digits(static_cast<std::size_t>(entries), 0);
    for (long long c = 0; c < count; ++c) {
        Matrix g1(f, rows, cols);
        for (int e = 0; e < entries; ++e)
            g1.at(e / cols, e % cols) = Scalar::of_int(f, digits[e]);

        bool ok = true;
        for (int r = 0; ok && r < rel.dim(); ++r) {
            Vec w(static_cast<std::size_t>(rows) * rows, Scalar::zero(f));
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < ns; ++j) {
                    const Scalar& cv = rel.basis().at(r, i * ns + j);
                    if (cv.is_zero()) continue;
                    for (int s = 0; s < rows; ++s) {
                        if (g1.at(s, i).is_zero()) continue;
                        for (int t = 0; t < rows; ++t) {
                            if (g1.at(t, j).is_zero()) continue;
                            std::size_t pos =
                                static_cast<std::size_t>(s) * rows + t;
                            w[pos] = w[pos] + cv * g1.at(s, i) * g1.at(t, j);
                        }
                    }
                }
            for (const Scalar& v : m11.apply(w))
                if (!v.is_zero()) {
                    ok = false;
                    break;
                }
        }
        if (ok) out.push_back(std::move(g1));

        for (int e = 0; e < entries; ++e) {
            if (++digits[e] < p) break;
            digits[e] = 0;
        }
    }
    return out;
}

AdjunctionCount adjunction_oracle(const QuadraticAlgebra& a,
                                  const QuadraticAlgebra& b,
                                  const QuadraticAlgebra& z, int top_degree,
                                  Budget& budget) {
    CohomObject ch = cohom(a, b, top_degree, budget);
    GradedAlgebraPtr z_t = truncate(z, top_degree, budget);
    GradedAlgebraPtr za = degreewise_product(z_t, ch.parameter_t);

    std::vector<Matrix> hom_side = enumerate_morphisms(ch.hom_t, z_t, budget);
    std::vector<Matrix> tensor_side =
        enumerate_morphisms(ch.target_t, za, budget);

    std::map<std::string, int> tensor_index;
    for (std::size_t i = 0; i < tensor_side.size(); ++i)
        tensor_index.emplace(tensor_side[i].to_string(), static_cast<int>(i));
    std::map<std::string, int> hom_index;
    for (std::size_t i = 0; i < hom_side.size(); ++i)
        hom_index.emplace(hom_side[i].to_string(), static_cast<int>(i));

    int na = a.num_generators(), nb = b.num_generators();
    bool bij = hom_side.size() == tensor_side.size();
    for (const Matrix& f1 : hom_side) {
        auto res = morphism_from_degree1(ch.hom_t, z_t, f1);
        if (!res.morphism) {
            bij = false;
            break;
        }
        Matrix g1 = vartheta(ch, *res.morphism).degree1();
        bij = bij && tensor_index.count(g1.to_string()) > 0;
        bij = bij &&
              transpose_under_pairing(g1, z_t->dim(1), na, nb) == f1;
    }
    for (const Matrix& g1 : tensor_side) {
        if (!bij) break;
        GradedMorphism f = vartheta_inverse(ch, z_t, g1);
        bij = bij && hom_index.count(f.degree1().to_string()) > 0;
        bij = bij && vartheta(ch, f).degree1() == g1;
    }
    return AdjunctionCount{static_cast<long long>(hom_side.size()),
                           static_cast<long long>(tensor_side.size()), bij};
}

GradedMorphism cocomposition_from_parts(const CohomObject& uw,
                                        const CohomObject& vw,
                                        const CohomObject& uv) {
    if (!same_presentation(uw.parameter, uv.parameter) ||
        !same_presentation(uv.target, vw.parameter) ||
        !same_presentation(vw.target, uw.target))
        throw InputError("cocomposition parts do not share endpoints");
    const Field& f = uw.parameter.field;
    int n_vw = vw.algebra.num_generators();
    Matrix lift = Matrix::kron(Matrix::identity(f, n_vw), uv.coev.degree1());
    Matrix g1 = lift * vw.coev.degree1();
    GradedAlgebraPtr z = degreewise_product(vw.hom_t, uv.hom_t);
    return vartheta_inverse(uw, z, g1);
}

GradedMorphism cocomposition(const QuadraticAlgebra& u,
                             const QuadraticAlgebra& v,
                             const QuadraticAlgebra& w, int top_degree,
                             Budget& budget) {
    CohomObject uw = cohom(u, w, top_degree, budget);
    CohomObject vw = cohom(v, w, top_degree, budget);
    CohomObject uv = cohom(u, v, top_degree, budget);
    return cocomposition_from_parts(uw, vw, uv);
}

GradedMorphism counit_v(const CohomObject& ch, Budget& budget) {
    if (!same_presentation(ch.parameter, ch.target))
        throw InputError("the counit lives on cohom(B,B)");
    const Field& f = ch.parameter.field;
    GradedAlgebraPtr unit_t =
        truncate(polynomial_line(f), ch.hom_t->top_degree(), budget);
    return vartheta_inverse(ch, unit_t,
                            Matrix::identity(f, ch.target.num_generators()));
}

CoendComonoid coend_comonoid(const QuadraticAlgebra& b, int top_degree,
                             Budget& budget) {
    CohomObject ch = cohom(b, b, top_degree, budget);
    GradedMorphism d = cocomposition_from_parts(ch, ch, ch);
    GradedMorphism v = counit_v(ch, budget);
    return CoendComonoid{std::move(ch), std::move(d), std::move(v)};
}

std::vector<std::string> check_comonoid(const GradedMorphism& delta,
                                        const GradedMorphism& eps,
                                        int degree) {
    std::vector<std::string> out;
    const GradedAlgebraPtr& x = delta.source();
    int top = std::min({degree, delta.top_degree(), eps.top_degree()});
    for (int k = 0; k <= top; ++k) {
        long long d = x->dim(k);
        if (delta.target()->dim(k) != d * d || eps.target()->dim(k) != 1) {
            out.push_back("degree " + std::to_string(k) +
                          ": comultiplication or counit target has wrong size");
            return out;
        }
        for (int j = 0; j < d; ++j) {
            SparseVec s = sparse_column(delta.at(k), j);
            if (sparse_apply_left(delta.at(k), d, s) !=
                sparse_apply_right(delta.at(k), s))
                out.push_back("coassociativity fails at degree " +
                              std::to_string(k) + " on " +
                              x->basis_label(k, j));
            SparseVec unit_j{{j, Scalar::one(x->field())}};
            if (sparse_apply_left(eps.at(k), d, s) != unit_j)
                out.push_back("left counit law fails at degree " +
                              std::to_string(k) + " on " +
                              x->basis_label(k, j));
            if (sparse_apply_right(eps.at(k), s) != unit_j)
                out.push_back("right counit law fails at degree " +
                              std::to_string(k) + " on " +
                              x->basis_label(k, j));
        }
    }
    return out;
}

std::vector<std::string> check_comonoid_morphism(const GradedMorphism& f,
                                                 const GradedMorphism& d_src,
                                                 const GradedMorphism& e_src,
                                                 const GradedMorphism& d_tgt,
                                                 const GradedMorphism& e_tgt,
                                                 int degree) {
    std::vector<std::string> out;
    const GradedAlgebraPtr& x = f.source();
    int top = std::min({degree, f.top_degree(), d_src.top_degree(),
                        d_tgt.top_degree(), e_src.top_degree(),
                        e_tgt.top_degree()});
    for (int k = 0; k <= top; ++k) {
        long long src_d = x->dim(k);
        for (int j = 0; j < src_d; ++j) {
            SparseVec fx = sparse_column(f.at(k), j);
            SparseVec lhs = sparse_apply(d_tgt.at(k), fx);
            SparseVec rhs = sparse_column(d_src.at(k), j);
            rhs = sparse_apply_left(f.at(k), src_d, rhs);
            rhs = sparse_apply_right(f.at(k), rhs);
            if (lhs != rhs)
                out.push_back("comultiplication square fails at degree " +
                              std::to_string(k) + " on " +
                              x->basis_label(k, j));
            if (sparse_apply(e_tgt.at(k), fx) !=
                sparse_column(e_src.at(k), j))
                out.push_back("counit square fails at degree " +
                              std::to_string(k) + " on " +
                              x->basis_label(k, j));
        }
    }
    return out;
}

KappaData kappa(const QuadraticAlgebra& v, const QuadraticAlgebra& vp,
                const QuadraticAlgebra& w, const QuadraticAlgebra& wp,
                int top_degree, Budget& budget) {
    const Field& f = v.field;
    CohomObject big =
        cohom(white_product(v, vp), white_product(w, wp), top_degree, budget);
    CohomObject left = cohom(v, w, top_degree, budget);
    CohomObject right = cohom(vp, wp, top_degree, budget);

    Matrix pair = Matrix::kron(left.coev.degree1(), right.coev.degree1());
    Matrix swap =
        middle_swap4(f, left.algebra.num_generators(), v.num_generators(),
                     right.algebra.num_generators(), vp.num_generators());
    Matrix g1 = swap * pair;
    GradedAlgebraPtr z = degreewise_product(left.hom_t, right.hom_t);
    GradedMorphism k = vartheta_inverse(big, z, g1);
    return KappaData{std::move(big), std::move(left), std::move(right),
                     std::move(z), std::move(k)};
}

std::vector<std::string> check_kappa_comonoid_morphism(
    const QuadraticAlgebra& v, const QuadraticAlgebra& vp, int top_degree,
    Budget& budget) {
    std::vector<std::string> out;
    KappaData kd = kappa(v, vp, v, vp, top_degree, budget);
    GradedMorphism d_left = cocomposition_from_parts(kd.left, kd.left, kd.left);
    GradedMorphism v_left = counit_v(kd.left, budget);
    GradedMorphism d_right =
        cocomposition_from_parts(kd.right, kd.right, kd.right);
    GradedMorphism v_right = counit_v(kd.right, budget);
    GradedMorphism d_big = cocomposition_from_parts(kd.big, kd.big, kd.big);
    GradedMorphism v_big = counit_v(kd.big, budget);

    int top = std::min({top_degree, kd.kappa.top_degree(), d_big.top_degree()});
    for (int k = 0; k <= top; ++k) {
        long long el = kd.left.hom_t->dim(k);
        long long er = kd.right.hom_t->dim(k);
        long long bg = kd.big.hom_t->dim(k);
        for (int j = 0; j < bg; ++j) {
            SparseVec x = sparse_column(kd.kappa.at(k), j);

            SparseVec c = sparse_apply_left(v_left.at(k), er, x);
            c = sparse_apply_right(v_right.at(k), c);
            if (c != sparse_column(v_big.at(k), j))
                out.push_back("counit square fails at degree " +
                              std::to_string(k) + " on " +
                              kd.big.hom_t->basis_label(k, j));

            SparseVec lhs = sparse_apply_left(d_left.at(k), er, x);
            lhs = sparse_apply_right(d_right.at(k), lhs);
            lhs = sparse_middle_swap(el, el, er, er, lhs);
            SparseVec rhs = sparse_column(d_big.at(k), j);
            rhs = sparse_apply_left(kd.kappa.at(k), bg, rhs);
            rhs = sparse_apply_right(kd.kappa.at(k), rhs);
            if (lhs != rhs)
                out.push_back("comultiplication square fails at degree " +
                              std::to_string(k) + " on " +
                              kd.big.hom_t->basis_label(k, j));
        }
    }
    return out;
}

}  // namespace maninkit
