#include <random>

#include "doctest.h"
#include "maninkit/corpus.hpp"
#include "maninkit/quadalg.hpp"

using namespace maninkit;

namespace {

std::vector<int> trunc_dims(const QuadraticAlgebra& a, int top) {
    Budget budget;
    return truncate(a, top, budget)->dims();
}

// The free algebra on x, y truncated at degree 3 with the single cubic
// monomial yyy killed.  Monomial codes are base-2 digit strings, so in
// degree 3 the surviving basis is codes 0..6 in order.
GradedAlgebraPtr cubic_quotient(const Field& f) {
    std::vector<int> dims{1, 2, 4, 7};
    std::vector<std::vector<Matrix>> mult;
    for (int i = 0; i <= 3; ++i) {
        std::vector<Matrix> row;
        for (int j = 0; i + j <= 3; ++j) {
            int k = i + j;
            Matrix m(f, dims[static_cast<std::size_t>(k)],
                     dims[static_cast<std::size_t>(i)] *
                         dims[static_cast<std::size_t>(j)]);
            for (int a = 0; a < dims[static_cast<std::size_t>(i)]; ++a)
                for (int b = 0; b < dims[static_cast<std::size_t>(j)]; ++b) {
                    int concat = a * (1 << j) + b;
                    if (k == 3 && concat == 7) continue;  // yyy = 0
                    m.at(concat, a * dims[static_cast<std::size_t>(j)] + b) =
                        Scalar::one(f);
                }
            row.push_back(std::move(m));
        }
        mult.push_back(std::move(row));
    }
    return std::make_shared<GradedAlgebra>(f, dims, std::move(mult),
                                           std::vector<std::string>{"x", "y"});
}

QuadraticAlgebra random_quadratic(const Field& f, int n, int num_rels,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Vec> rows;
    for (int r = 0; r < num_rels; ++r) {
        Vec v;
        for (int c = 0; c < n * n; ++c)
            v.push_back(Scalar::of_int(f, coeff(rng)));
        rows.push_back(std::move(v));
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    return QuadraticAlgebra::make(f, labels,
                                  Subspace::span(f, std::move(rows), n * n));
}

}  // namespace

TEST_CASE("truncations of the stock algebras reach the expected dimensions") {
    Field q = Field::rationals();
    CHECK(trunc_dims(free_algebra(q, 2), 4) ==
          std::vector<int>{1, 2, 4, 8, 16});
    CHECK(trunc_dims(free_algebra(Field::prime(3), 2), 4) ==
          std::vector<int>{1, 2, 4, 8, 16});
    CHECK(trunc_dims(quantum_plane(q, Scalar::of_int(q, 2)), 4) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK(trunc_dims(dual_numbers(q), 4) == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(trunc_dims(polynomial_line(q), 4) ==
          std::vector<int>{1, 1, 1, 1, 1});
    CHECK(trunc_dims(QuadraticAlgebra::make(q, {}, Subspace::zero(q, 0)), 4) ==
          std::vector<int>{1, 0, 0, 0, 0});
}

TEST_CASE("degree-six truncation is available on request") {
    Field q = Field::rationals();
    CHECK(trunc_dims(quantum_plane(q, Scalar::of_int(q, 2)), 6) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("truncations are associative algebras generated in degree one") {
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (const auto& [name, a] : standard_corpus(f)) {
            INFO(name);
            Budget budget;
            GradedAlgebraPtr t = truncate(a, 4, budget);
            CHECK(check_graded_algebra(*t).empty());
            CHECK(check_generated_in_degree_one(*t).empty());
        }
    }
}

TEST_CASE("truncation basis vectors carry monomial labels") {
    Field q = Field::rationals();
    Budget budget;
    GradedAlgebraPtr fr = truncate(free_algebra(q, 2), 3, budget);
    CHECK(fr->basis_label(0, 0) == "1");
    CHECK(fr->basis_label(1, 0) == "x");
    CHECK(fr->basis_label(2, 1) == "xy");
    CHECK(fr->basis_label(3, 5) == "yxy");

    // x(x)y is the pivot of the quantum-plane relation, so the surviving
    // degree-2 cosets are xx, yx, yy.
    GradedAlgebraPtr qp =
        truncate(quantum_plane(q, Scalar::of_int(q, 2)), 3, budget);
    CHECK(qp->basis_label(2, 0) == "xx");
    CHECK(qp->basis_label(2, 1) == "yx");
    CHECK(qp->basis_label(2, 2) == "yy");
}

TEST_CASE("quantum plane multiplication reorders with the parameter") {
    Field q = Field::rationals();
    Budget budget;
    GradedAlgebraPtr qp =
        truncate(quantum_plane(q, Scalar::of_int(q, 2)), 3, budget);
    // x * y = 2 y x  in the coset basis {xx, yx, yy}.
    Vec x{Scalar::one(q), Scalar::zero(q)};
    Vec y{Scalar::zero(q), Scalar::one(q)};
    Vec prod = qp->multiply(1, x, 1, y);
    CHECK(prod == Vec{Scalar::zero(q), Scalar::of_int(q, 2), Scalar::zero(q)});
}

TEST_CASE("white product dimensions are the products of the dimensions") {
    Field q = Field::rationals();
    auto corpus = standard_corpus(q);
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            INFO(na, " o ", nb);
            std::vector<int> da = trunc_dims(a, 4), db = trunc_dims(b, 4);
            std::vector<int> expect;
            for (int k = 0; k <= 4; ++k)
                expect.push_back(da[static_cast<std::size_t>(k)] *
                                 db[static_cast<std::size_t>(k)]);
            CHECK(trunc_dims(white_product(a, b), 4) == expect);
        }
}

TEST_CASE("the polynomial line is a unit for the white product") {
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        QuadraticAlgebra one = polynomial_line(f);
        for (const auto& [name, a] : standard_corpus(f)) {
            INFO(name);
            CHECK(white_product(one, a).relations == a.relations);
            CHECK(white_product(a, one).relations == a.relations);
        }
    }
}

TEST_CASE("black product relation spaces have product dimension") {
    Field q = Field::rationals();
    auto corpus = standard_corpus(q);
    for (const auto& [na, a] : corpus)
        for (const auto& [nb, b] : corpus) {
            INFO(na, " . ", nb);
            CHECK(black_product(a, b).relations.dim() ==
                  a.relations.dim() * b.relations.dim());
        }
}

TEST_CASE("quadratic duality is an involution on relation spaces") {
    for (const Field& f : {Field::rationals(), Field::prime(2),
                           Field::prime(7)}) {
        for (const auto& [name, a] : standard_corpus(f)) {
            INFO(name);
            CHECK(quadratic_dual(quadratic_dual(a)).relations == a.relations);
        }
    }
    Field q = Field::rationals();
    CHECK(quadratic_dual(free_algebra(q, 2)).labels ==
          std::vector<std::string>{"x*", "y*"});
}

TEST_CASE("duality swaps free and truncated-at-two presentations") {
    Field q = Field::rationals();
    CHECK(trunc_dims(quadratic_dual(free_algebra(q, 2)), 4) ==
          std::vector<int>{1, 2, 0, 0, 0});
    // The dual of the dual numbers is a polynomial line.
    CHECK(trunc_dims(quadratic_dual(dual_numbers(q)), 4) ==
          std::vector<int>{1, 1, 1, 1, 1});
    CHECK(trunc_dims(quadratic_dual(polynomial_line(q)), 4) ==
          std::vector<int>{1, 1, 0, 0, 0});
}

TEST_CASE("the dual of a quantum plane is a quantum exterior algebra") {
    Field q = Field::rationals();
    QuadraticAlgebra qp = quantum_plane(q, Scalar::of_int(q, 2));
    QuadraticAlgebra dual = quadratic_dual(qp);
    CHECK(dual.relations.dim() == 3);
    CHECK(trunc_dims(dual, 4) == std::vector<int>{1, 2, 1, 0, 0});
    // Every dual relation pairs to zero with the quantum-plane relation.
    for (int r = 0; r < dual.relations.dim(); ++r) {
        Scalar dot = Scalar::zero(q);
        for (int c = 0; c < 4; ++c)
            dot = dot + dual.relations.basis().at(r, c) *
                            qp.relations.basis().at(0, c);
        CHECK(dot.is_zero());
    }
}

TEST_CASE("dual-of-quantum-plane times quantum plane has the frozen "
          "dimensions") {
    Field q = Field::rationals();
    QuadraticAlgebra qp = quantum_plane(q, Scalar::of_int(q, 2));
    QuadraticAlgebra mixed = black_product(quadratic_dual(qp), qp);
    CHECK(mixed.num_generators() == 4);
    CHECK(mixed.relations.dim() == 3);
    std::vector<int> dims = trunc_dims(mixed, 2);
    CHECK(dims == std::vector<int>{1, 4, 13});
}

TEST_CASE("the quadratic part of a truncation recovers the presentation") {
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (const auto& [name, a] : standard_corpus(f)) {
            INFO(name);
            Budget budget;
            QuadraticAlgebra back = coreflection_G(*truncate(a, 3, budget));
            CHECK(back.relations == a.relations);
            CHECK(back.labels == a.labels);
        }
    }
}

TEST_CASE("the quadratic part of a cubic quotient is free") {
    Field q = Field::rationals();
    GradedAlgebraPtr t = cubic_quotient(q);
    CHECK(check_graded_algebra(*t).empty());
    CHECK(check_generated_in_degree_one(*t).empty());
    QuadraticAlgebra g = coreflection_G(*t);
    CHECK(g.relations.dim() == 0);
    CHECK(g.relations == free_algebra(q, 2).relations);

    Budget budget;
    GradedMorphism counit = coreflection_counit(t, budget);
    CHECK(check_algebra_morphism(counit).empty());
    CHECK(counit.degree1() == Matrix::identity(q, 2));
    // Degree 3 is the 8-monomial free component mapping onto the 7
    // surviving cosets.
    CHECK(counit.at(3).rows() == 7);
    CHECK(counit.at(3).cols() == 8);
    CHECK(counit.at(3).rank() == 7);
}

TEST_CASE("the quadratic part of a scalar-only algebra has no generators") {
    Field q = Field::rationals();
    std::vector<std::vector<Matrix>> mult;
    for (int i = 0; i <= 2; ++i) {
        std::vector<Matrix> row;
        for (int j = 0; i + j <= 2; ++j)
            row.push_back(i + j == 0 ? Matrix::identity(q, 1)
                                     : Matrix(q, 0, 0));
        mult.push_back(std::move(row));
    }
    GradedAlgebraPtr t = std::make_shared<GradedAlgebra>(
        q, std::vector<int>{1, 0, 0}, std::move(mult),
        std::vector<std::string>{});
    CHECK(check_graded_algebra(*t).empty());
    QuadraticAlgebra g = coreflection_G(*t);
    CHECK(g.num_generators() == 0);
    CHECK(trunc_dims(g, 3) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("the quadratic part needs at least two tabulated degrees") {
    Field q = Field::rationals();
    Budget budget;
    GradedAlgebraPtr t = truncate(free_algebra(q, 2), 1, budget);
    CHECK_THROWS_AS(coreflection_G(*t), InputError);
}

TEST_CASE("the counit of the quadratic part is the identity on truncations") {
    Field q = Field::rationals();
    Budget budget;
    GradedAlgebraPtr t = truncate(quantum_plane(q, Scalar::of_int(q, 2)), 4,
                                  budget);
    GradedMorphism counit = coreflection_counit(t, budget);
    CHECK(check_algebra_morphism(counit).empty());
    for (int k = 0; k <= 4; ++k)
        CHECK(counit.at(k) == Matrix::identity(q, t->dim(k)));
}

TEST_CASE("degree-one maps extend exactly when they preserve relations") {
    Field q = Field::rationals();
    QuadraticAlgebra qp2 = quantum_plane(q, Scalar::of_int(q, 2));
    QuadraticAlgebra qp3 = quantum_plane(q, Scalar::of_int(q, 3));
    Budget budget;
    GradedAlgebraPtr t2 = truncate(qp2, 3, budget);
    GradedAlgebraPtr t3 = truncate(qp3, 3, budget);

    // Scaling y by 2 rescales the relation, so it extends.
    Matrix diag(q, 2, 2);
    diag.at(0, 0) = Scalar::one(q);
    diag.at(1, 1) = Scalar::of_int(q, 2);
    auto good = morphism_from_degree1(t2, t2, diag);
    REQUIRE(good.morphism.has_value());
    CHECK(check_algebra_morphism(*good.morphism).empty());

    // The identity does not identify different parameters.
    auto crossed = morphism_from_degree1(t2, t3, Matrix::identity(q, 2));
    CHECK(!crossed.morphism.has_value());
    CHECK(crossed.witness.find("x") != std::string::npos);

    // Swapping x and y sends the relation to y(x)x - 2 x(x)y, which is not
    // proportional to it.
    Matrix swap = Matrix::basis_permutation(q, 2, {1, 0});
    auto swapped = morphism_from_degree1(t2, t2, swap);
    CHECK(!swapped.morphism.has_value());
}

TEST_CASE("graded morphisms compose associatively") {
    Field q = Field::rationals();
    Budget budget;
    GradedAlgebraPtr fr = truncate(free_algebra(q, 2), 3, budget);
    GradedAlgebraPtr t2 =
        truncate(quantum_plane(q, Scalar::of_int(q, 2)), 3, budget);

    auto f = morphism_from_degree1(fr, t2, Matrix::identity(q, 2));
    REQUIRE(f.morphism.has_value());
    Matrix diag(q, 2, 2);
    diag.at(0, 0) = Scalar::one(q);
    diag.at(1, 1) = Scalar::of_int(q, 2);
    auto g = morphism_from_degree1(t2, t2, diag);
    REQUIRE(g.morphism.has_value());
    auto h = morphism_from_degree1(t2, t2, diag);
    REQUIRE(h.morphism.has_value());

    GradedMorphism lhs = h.morphism->compose(*g.morphism).compose(*f.morphism);
    GradedMorphism rhs = h.morphism->compose(g.morphism->compose(*f.morphism));
    CHECK(lhs.equal_upto(rhs, 3));
    CHECK(check_algebra_morphism(lhs).empty());
}

TEST_CASE("white product presents the quadratic part of the matched-degree "
          "product") {
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        auto corpus = standard_corpus(f);
        for (const auto& [na, a] : corpus)
            for (const auto& [nb, b] : corpus) {
                INFO(na, " o ", nb);
                Budget budget;
                GradedAlgebraPtr prod = degreewise_product(
                    truncate(a, 2, budget), truncate(b, 2, budget));
                CHECK(coreflection_G(*prod).relations ==
                      white_product(a, b).relations);
            }
    }
}

TEST_CASE("tensor presentation agrees with the blockwise tensor product") {
    Field q = Field::rationals();
    QuadraticAlgebra qp2 = quantum_plane(q, Scalar::of_int(q, 2));
    QuadraticAlgebra qp3 = quantum_plane(q, Scalar::of_int(q, 3));
    QuadraticAlgebra joint = tensor_presentation(qp2, qp3);
    CHECK(joint.num_generators() == 4);
    CHECK(joint.labels == std::vector<std::string>{"x", "y", "x'", "y'"});
    CHECK(joint.relations.dim() == 1 + 1 + 4);

    Budget budget;
    GradedAlgebraPtr blocks =
        tensor_product(truncate(qp2, 3, budget), truncate(qp3, 3, budget));
    CHECK(check_graded_algebra(*blocks).empty());
    CHECK(blocks->dims() == std::vector<int>{1, 4, 10, 20});
    CHECK(trunc_dims(joint, 3) == blocks->dims());
}

TEST_CASE("truncation stops when the work budget runs out") {
    Field q = Field::rationals();
    Budget tiny(100);
    CHECK_THROWS_AS(truncate(free_algebra(q, 3), 4, tiny), BudgetError);
}

TEST_CASE("white, black, dual interplay on random presentations") {
    std::mt19937_64 rng(20260823);
    Field f5 = Field::prime(5);
    for (int trial = 0; trial < 12; ++trial) {
        QuadraticAlgebra a = random_quadratic(f5, 2, 1 + (trial % 2), rng);
        QuadraticAlgebra b = random_quadratic(f5, 2, 1, rng);

        CHECK(quadratic_dual(quadratic_dual(a)).relations == a.relations);

        // Dimensions of the white product multiply degreewise.
        std::vector<int> da = trunc_dims(a, 3), db = trunc_dims(b, 3);
        std::vector<int> expect;
        for (int k = 0; k <= 3; ++k)
            expect.push_back(da[static_cast<std::size_t>(k)] *
                             db[static_cast<std::size_t>(k)]);
        CHECK(trunc_dims(white_product(a, b), 3) == expect);

        // Black relations sit inside white relations.
        CHECK(white_product(a, b).relations.contains(
            black_product(a, b).relations));

        // The coreflection of the truncation reproduces the relations.
        Budget budget;
        CHECK(coreflection_G(*truncate(a, 2, budget)).relations ==
              a.relations);
    }
}
