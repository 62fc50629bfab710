#include <random>
#include <vector>

#include "doctest.h"
#include "maninkit/matrix.hpp"
#include "maninkit/subspace.hpp"

using namespace maninkit;

namespace {

Vec vec_of(const Field& f, const std::vector<long long>& entries) {
    Vec v;
    v.reserve(entries.size());
    for (long long e : entries) v.push_back(Scalar::of_int(f, e));
    return v;
}

Matrix mat_of(const Field& f, const std::vector<std::vector<long long>>& rows,
              int cols) {
    std::vector<Vec> vrows;
    vrows.reserve(rows.size());
    for (const auto& r : rows) vrows.push_back(vec_of(f, r));
    return Matrix::from_rows(f, vrows, cols);
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_rational()) {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 3);
        return Scalar::of_rational(f, num(rng), den(rng));
    }
    std::uniform_int_distribution<int> res(0, f.p() - 1);
    return Scalar::of_int(f, res(rng));
}

Matrix random_matrix(const Field& f, int rows, int cols,
                     std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

const std::vector<Field> kTestFields = {Field::rationals(), Field::prime(2),
                                        Field::prime(3), Field::prime(5)};

}  // namespace

TEST_CASE("scalar arithmetic over the rationals") {
    Field q = Field::rationals();
    Scalar a = Scalar::of_rational(q, 2, 3);
    Scalar b = Scalar::of_rational(q, 1, 6);
    CHECK((a + b) == Scalar::of_rational(q, 5, 6));
    CHECK((a * b) == Scalar::of_rational(q, 1, 9));
    CHECK((a - a).is_zero());
    CHECK((a / b) == Scalar::of_int(q, 4));
    CHECK(a.inverse() == Scalar::of_rational(q, 3, 2));
    CHECK((-a) == Scalar::of_rational(q, -2, 3));
}

TEST_CASE("scalar arithmetic in prime fields") {
    Field f5 = Field::prime(5);
    Scalar a = Scalar::of_int(f5, 3);
    Scalar b = Scalar::of_int(f5, 4);
    CHECK((a + b) == Scalar::of_int(f5, 2));
    CHECK((a * b) == Scalar::of_int(f5, 2));
    CHECK(a.inverse() == Scalar::of_int(f5, 2));  // 3*2 = 6 = 1 mod 5
    CHECK((a / b) == Scalar::of_int(f5, 2));      // 3 * 4^{-1} = 3*4 = 12 = 2
    CHECK(Scalar::of_int(f5, -1) == Scalar::of_int(f5, 4));
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(Field::prime(65536), InputError);
    CHECK_NOTHROW(Field::prime(65521));  // largest prime below 2^16
}

TEST_CASE("mixed-field operations are rejected") {
    Scalar a = Scalar::of_int(Field::rationals(), 1);
    Scalar b = Scalar::of_int(Field::prime(3), 1);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * b, FieldMismatchError);
    CHECK_THROWS_AS(a / b, FieldMismatchError);
}

TEST_CASE("division by zero is an error") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), InputError);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), InputError);
    Field f3 = Field::prime(3);
    CHECK_THROWS_AS(Scalar::one(f3) / Scalar::zero(f3), InputError);
}

TEST_CASE("scalar parsing") {
    Field q = Field::rationals();
    CHECK(Scalar::parse(q, "7") == Scalar::of_int(q, 7));
    CHECK(Scalar::parse(q, "-7") == Scalar::of_int(q, -7));
    CHECK(Scalar::parse(q, "2/4") == Scalar::of_rational(q, 1, 2));
    CHECK(Scalar::parse(q, "-3/6") == Scalar::of_rational(q, -1, 2));
    Field f5 = Field::prime(5);
    CHECK(Scalar::parse(f5, "7") == Scalar::of_int(f5, 2));
    CHECK(Scalar::parse(f5, "3/4") == Scalar::of_int(f5, 2));  // 3*4^{-1}
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), InputError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), InputError);
    CHECK_THROWS_AS(Scalar::parse(Field::prime(2), "1/2"), InputError);
}

TEST_CASE("rref drops zero rows and is canonical") {
    Field q = Field::rationals();
    Matrix m = mat_of(q, {{2, 4}, {1, 2}}, 2);
    Matrix r = m.rref();
    CHECK(r == mat_of(q, {{1, 2}}, 2));
    CHECK(m.rank() == 1);

    // Same row space reached from generators listed in a different order.
    Matrix m2 = mat_of(q, {{1, 2}, {2, 4}}, 2);
    CHECK(m2.rref() == r);
}

TEST_CASE("kernel of [1 1] is spanned by [1, -1]") {
    Field q = Field::rationals();
    Subspace k = Subspace::kernel(mat_of(q, {{1, 1}}, 2));
    CHECK(k.dim() == 1);
    CHECK(k.basis() == mat_of(q, {{1, -1}}, 2));
}

TEST_CASE("annihilator of span{x@y - 2 y@x} in dimension 4") {
    // Basis order of Q^2 (x) Q^2: x@x, x@y, y@x, y@y.
    Field q = Field::rationals();
    Subspace s = Subspace::span(mat_of(q, {{0, 1, -2, 0}}, 4));
    Subspace ann = s.annihilator();
    CHECK(ann.dim() == 3);
    std::vector<Vec> expect = {
        vec_of(q, {1, 0, 0, 0}),
        {Scalar::zero(q), Scalar::one(q), Scalar::of_rational(q, 1, 2),
         Scalar::zero(q)},
        vec_of(q, {0, 0, 0, 1}),
    };
    CHECK(ann.basis() == Matrix::from_rows(q, expect, 4));
    // Every annihilator row pairs to zero with the original generator.
    for (int r = 0; r < ann.basis().rows(); ++r) {
        Scalar pairing = Scalar::zero(q);
        for (int j = 0; j < 4; ++j)
            pairing += ann.basis().at(r, j) * s.basis().at(0, j);
        CHECK(pairing.is_zero());
    }
}

TEST_CASE("kron uses the (i,j) -> i*dim(b)+j index convention") {
    Field q = Field::rationals();
    // a = e_1 in Q^2 (index 1), b = e_0 in Q^3 (index 0):
    // a(x)b must be basis vector 1*3+0 = 3 of Q^6.
    Matrix a = mat_of(q, {{0, 1}}, 2);
    Matrix b = mat_of(q, {{1, 0, 0}}, 3);
    Matrix t = Matrix::kron(a, b);
    CHECK(t.rows() == 1);
    CHECK(t.cols() == 6);
    CHECK(t == mat_of(q, {{0, 0, 0, 1, 0, 0}}, 6));
}

TEST_CASE("matrix product, transpose, identity") {
    Field q = Field::rationals();
    Matrix a = mat_of(q, {{1, 2}, {3, 4}}, 2);
    Matrix b = mat_of(q, {{0, 1}, {1, 0}}, 2);
    CHECK(a * b == mat_of(q, {{2, 1}, {4, 3}}, 2));
    CHECK(a * Matrix::identity(q, 2) == a);
    CHECK(Matrix::identity(q, 2) * a == a);
    CHECK(a.transpose() == mat_of(q, {{1, 3}, {2, 4}}, 2));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a * mat_of(q, {{1}}, 1), DimensionError);
}

TEST_CASE("basis_permutation sends e_j to e_{image[j]}") {
    Field q = Field::rationals();
    Matrix p = Matrix::basis_permutation(q, 3, {2, 0, 1});
    Vec e0 = vec_of(q, {1, 0, 0});
    CHECK(p.apply(e0) == vec_of(q, {0, 0, 1}));
    Vec e2 = vec_of(q, {0, 0, 1});
    CHECK(p.apply(e2) == vec_of(q, {0, 1, 0}));
}

TEST_CASE("subspace membership and structural equality") {
    Field q = Field::rationals();
    Subspace s = Subspace::span(mat_of(q, {{1, 0, 1}, {0, 1, 1}}, 3));
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec_of(q, {1, 1, 2})));
    CHECK(!s.contains(vec_of(q, {0, 0, 1})));
    Subspace same = Subspace::span(mat_of(q, {{1, 1, 2}, {1, -1, 0}}, 3));
    CHECK(s == same);
    Subspace other = Subspace::span(mat_of(q, {{1, 0, 0}}, 3));
    CHECK(s != other);
    CHECK(s.contains(s));
    CHECK(!other.contains(s));
}

TEST_CASE("sum and intersection of planes in Q^3") {
    Field q = Field::rationals();
    Subspace a = Subspace::span(mat_of(q, {{1, 0, 0}, {0, 1, 0}}, 3));
    Subspace b = Subspace::span(mat_of(q, {{0, 1, 0}, {0, 0, 1}}, 3));
    CHECK(a.sum(b) == Subspace::full(q, 3));
    Subspace inter = a.intersect(b);
    CHECK(inter.dim() == 1);
    CHECK(inter.basis() == mat_of(q, {{0, 1, 0}}, 3));
}

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937_64 rng(2024);
    for (const Field& f : kTestFields) {
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m = random_matrix(f, 4, 5, rng);
            Matrix r = m.rref();
            CHECK(r.rref() == r);
            CHECK(Subspace::span(m) == Subspace::span(r));
        }
    }
}

TEST_CASE("rank-nullity across fields") {
    std::mt19937_64 rng(2025);
    for (const Field& f : kTestFields) {
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m = random_matrix(f, 3, 6, rng);
            Subspace k = Subspace::kernel(m);
            CHECK(k.dim() == m.cols() - m.rank());
            // Every kernel basis vector really maps to zero.
            for (int r = 0; r < k.basis().rows(); ++r) {
                Vec img = m.apply(k.basis().row(r));
                for (const Scalar& s : img) CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("annihilator is an involution") {
    std::mt19937_64 rng(2026);
    for (const Field& f : kTestFields) {
        for (int trial = 0; trial < 25; ++trial) {
            Subspace s = Subspace::span(random_matrix(f, 2, 5, rng));
            CHECK(s.annihilator().annihilator() == s);
            CHECK(s.dim() + s.annihilator().dim() == s.ambient_dim());
        }
    }
}

TEST_CASE("kron is functorial: kron(a,b) * kron(c,d) == kron(a*c, b*d)") {
    std::mt19937_64 rng(2027);
    for (const Field& f : kTestFields) {
        for (int trial = 0; trial < 15; ++trial) {
            Matrix a = random_matrix(f, 2, 3, rng);
            Matrix c = random_matrix(f, 3, 2, rng);
            Matrix b = random_matrix(f, 2, 2, rng);
            Matrix d = random_matrix(f, 2, 3, rng);
            CHECK(Matrix::kron(a, b) * Matrix::kron(c, d) ==
                  Matrix::kron(a * c, b * d));
        }
    }
}

TEST_CASE("dimension formula for sum and intersection") {
    std::mt19937_64 rng(2028);
    for (const Field& f : kTestFields) {
        for (int trial = 0; trial < 25; ++trial) {
            Subspace a = Subspace::span(random_matrix(f, 2, 4, rng));
            Subspace b = Subspace::span(random_matrix(f, 2, 4, rng));
            Subspace s = a.sum(b);
            Subspace i = a.intersect(b);
            CHECK(s.dim() + i.dim() == a.dim() + b.dim());
            CHECK(s.contains(a));
            CHECK(s.contains(b));
            CHECK(a.contains(i));
            CHECK(b.contains(i));
        }
    }
}

TEST_CASE("subspace kron dimensions multiply") {
    std::mt19937_64 rng(2029);
    for (const Field& f : kTestFields) {
        Subspace a = Subspace::span(random_matrix(f, 2, 3, rng));
        Subspace b = Subspace::span(random_matrix(f, 1, 2, rng));
        Subspace t = Subspace::kron(a, b);
        CHECK(t.ambient_dim() == 6);
        CHECK(t.dim() == a.dim() * b.dim());
    }
}
