#pragma once

#include <string>
#include <vector>

#include "maninkit/matrix.hpp"

namespace maninkit {

/// A subspace of K^n, stored as the unique reduced row-echelon basis of its
/// span.  Two Subspace values compare equal iff they are literally the same
/// subspace of the same ambient space over the same field.
class Subspace {
  public:
    /// The span of the rows of `gens` inside K^ambient_dim.
    static Subspace span(const Matrix& gens);
    /// Span of the given vectors (each of length ambient_dim).
    static Subspace span(const Field& f, const std::vector<Vec>& gens,
                         int ambient_dim);
    static Subspace zero(const Field& f, int ambient_dim);
    static Subspace full(const Field& f, int ambient_dim);

    const Field& field() const { return field_; }
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return basis_.rows(); }
    /// Canonical basis: RREF rows, zero rows dropped.
    const Matrix& basis() const { return basis_; }
    /// Pivot columns of the canonical basis, strictly increasing.
    const std::vector<int>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Null space { x : m x = 0 } of the matrix, inside K^cols.
    static Subspace kernel(const Matrix& m);
    /// { f in (K^n)^* : f|_this = 0 }, in dual-basis coordinates.
    Subspace annihilator() const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    /// Tensor product inside K^{n*m}, basis index (i,j) -> i*m + j.
    static Subspace kron(const Subspace& a, const Subspace& b);

    /// Image { m x : x in this } under a linear map K^n -> K^rows.
    Subspace apply(const Matrix& m) const;

    std::string to_string() const;

  private:
    Subspace(const Field& f, int ambient_dim, Matrix basis,
             std::vector<int> pivots)
        : field_(f),
          ambient_dim_(ambient_dim),
          basis_(std::move(basis)),
          pivots_(std::move(pivots)) {}

    Field field_;
    int ambient_dim_;
    Matrix basis_;
    std::vector<int> pivots_;
};

}  // namespace maninkit
