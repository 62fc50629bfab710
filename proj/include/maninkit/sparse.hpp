#pragma once

#include <map>

#include "maninkit/matrix.hpp"

namespace maninkit {

/// Nonzero coordinates of a vector, keyed by index.  Helpers below keep the
/// invariant that stored values are nonzero, so equality of maps is equality
/// of vectors.  Used for columnwise evaluation of composites whose dense
/// matrices would be too large to hold.
using SparseVec = std::map<long long, Scalar>;

SparseVec sparse_column(const Matrix& m, int col);

void sparse_add(SparseVec& acc, long long index, const Scalar& value);

/// y = m x.
SparseVec sparse_apply(const Matrix& m, const SparseVec& x);

/// x is indexed a * right_dim + b; y[r * right_dim + b] += f[r, a] * x.
SparseVec sparse_apply_left(const Matrix& f, long long right_dim,
                            const SparseVec& x);

/// x is indexed a * g.cols() + b; y[a * g.rows() + r] += g[r, b] * x.
SparseVec sparse_apply_right(const Matrix& g, const SparseVec& x);

/// Reindex (x1, x2, x3, x4) -> (x1, x3, x2, x4) with the given factor sizes.
SparseVec sparse_middle_swap(long long d1, long long d2, long long d3,
                             long long d4, const SparseVec& x);

}  // namespace maninkit
