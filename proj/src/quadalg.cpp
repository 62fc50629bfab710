#include "maninkit/quadalg.hpp"

#include <algorithm>

namespace maninkit {

namespace {

std::vector<std::string> pair_labels(const QuadraticAlgebra& a,
                                     const QuadraticAlgebra& b) {
    std::vector<std::string> labels;
    labels.reserve(a.labels.size() * b.labels.size());
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels) labels.push_back("(" + la + "," + lb + ")");
    return labels;
}

void require_same_field(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
    if (!(a.field == b.field))
        throw FieldMismatchError("product of algebras over different fields");
}

}  // namespace

Matrix middle_swap(const Field& f, int na, int nb) {
    return middle_swap4(f, na, na, nb, nb);
}

Matrix middle_swap4(const Field& f, int d1, int d2, int d3, int d4) {
    int total = d1 * d2 * d3 * d4;
    std::vector<int> image(static_cast<std::size_t>(total));
    for (int x1 = 0; x1 < d1; ++x1)
        for (int x2 = 0; x2 < d2; ++x2)
            for (int x3 = 0; x3 < d3; ++x3)
                for (int x4 = 0; x4 < d4; ++x4) {
                    int src = ((x1 * d2 + x2) * d3 + x3) * d4 + x4;
                    int dst = ((x1 * d3 + x3) * d2 + x2) * d4 + x4;
                    image[static_cast<std::size_t>(src)] = dst;
                }
    return Matrix::basis_permutation(f, total, image);
}

QuadraticAlgebra white_product(const QuadraticAlgebra& a,
                               const QuadraticAlgebra& b) {
    require_same_field(a, b);
    int na = a.num_generators(), nb = b.num_generators();
    Subspace unswapped =
        Subspace::kron(a.relations, Subspace::full(a.field, nb * nb))
            .sum(Subspace::kron(Subspace::full(a.field, na * na),
                                b.relations));
    return QuadraticAlgebra::make(
        a.field, pair_labels(a, b),
        unswapped.apply(middle_swap(a.field, na, nb)));
}

QuadraticAlgebra black_product(const QuadraticAlgebra& a,
                               const QuadraticAlgebra& b) {
    require_same_field(a, b);
    int na = a.num_generators(), nb = b.num_generators();
    return QuadraticAlgebra::make(
        a.field, pair_labels(a, b),
        Subspace::kron(a.relations, b.relations)
            .apply(middle_swap(a.field, na, nb)));
}

QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a) {
    std::vector<std::string> labels;
    labels.reserve(a.labels.size());
    for (const auto& l : a.labels) labels.push_back(l + "*");
    return QuadraticAlgebra::make(a.field, std::move(labels),
                                  a.relations.annihilator());
}

QuadraticAlgebra tensor_presentation(const QuadraticAlgebra& a,
                                     const QuadraticAlgebra& b) {
    require_same_field(a, b);
    const Field& f = a.field;
    int na = a.num_generators(), nb = b.num_generators();
    int n = na + nb;

    std::vector<std::string> labels = a.labels;
    for (const auto& lb : b.labels) {
        std::string l = lb;
        while (std::find(labels.begin(), labels.end(), l) != labels.end())
            l += "'";
        labels.push_back(l);
    }

    // Letters of the first factor keep their indices; letters of the second
    // are shifted past them.
    std::vector<Vec> rows;
    for (int r = 0; r < a.relations.dim(); ++r) {
        Vec big(static_cast<std::size_t>(n * n), Scalar::zero(f));
        const Vec& small = a.relations.basis().row(r);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j)
                big[static_cast<std::size_t>(i * n + j)] =
                    small[static_cast<std::size_t>(i * na + j)];
        rows.push_back(std::move(big));
    }
    for (int r = 0; r < b.relations.dim(); ++r) {
        Vec big(static_cast<std::size_t>(n * n), Scalar::zero(f));
        const Vec& small = b.relations.basis().row(r);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                big[static_cast<std::size_t>((na + i) * n + (na + j))] =
                    small[static_cast<std::size_t>(i * nb + j)];
        rows.push_back(std::move(big));
    }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Vec big(static_cast<std::size_t>(n * n), Scalar::zero(f));
            big[static_cast<std::size_t>(i * n + (na + j))] = Scalar::one(f);
            big[static_cast<std::size_t>((na + j) * n + i)] =
                Scalar::zero(f) - Scalar::one(f);
            rows.push_back(std::move(big));
        }
    return QuadraticAlgebra::make(
        f, std::move(labels), Subspace::span(f, std::move(rows), n * n));
}

QuadraticAlgebra coreflection_G(const GradedAlgebra& t) {
    if (t.top_degree() < 2)
        throw InputError(
            "extracting the quadratic part needs the algebra tabulated "
            "through degree 2");
    int n = t.dim(1);
    std::vector<std::string> labels = t.degree1_labels();
    if (static_cast<int>(labels.size()) != n) {
        labels.clear();
        for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    return QuadraticAlgebra::make(t.field(), std::move(labels),
                                  Subspace::kernel(t.mult(1, 1)));
}

GradedMorphism coreflection_counit(const GradedAlgebraPtr& t, Budget& budget) {
    QuadraticAlgebra g = coreflection_G(*t);
    GradedAlgebraPtr source = truncate(g, t->top_degree(), budget);
    auto res = morphism_from_degree1(source, t,
                                     Matrix::identity(t->field(), t->dim(1)));
    if (!res.morphism)
        throw InternalError("counit of the quadratic part failed to extend: " +
                            res.witness);
    return *res.morphism;
}

}  // namespace maninkit
