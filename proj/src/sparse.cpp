#include "maninkit/sparse.hpp"

namespace maninkit {

SparseVec sparse_column(const Matrix& m, int col) {
    SparseVec out;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.at(r, col).is_zero()) out.emplace(r, m.at(r, col));
    return out;
}

void sparse_add(SparseVec& acc, long long index, const Scalar& value) {
    if (value.is_zero()) return;
    auto it = acc.find(index);
    if (it == acc.end()) {
        acc.emplace(index, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) acc.erase(it);
}

SparseVec sparse_apply(const Matrix& m, const SparseVec& x) {
    SparseVec out;
    for (const auto& [j, v] : x)
        for (int r = 0; r < m.rows(); ++r) {
            const Scalar& c = m.at(r, static_cast<int>(j));
            if (!c.is_zero()) sparse_add(out, r, c * v);
        }
    return out;
}

SparseVec sparse_apply_left(const Matrix& f, long long right_dim,
                            const SparseVec& x) {
    SparseVec out;
    for (const auto& [idx, v] : x) {
        long long a = idx / right_dim, b = idx % right_dim;
        for (int r = 0; r < f.rows(); ++r) {
            const Scalar& c = f.at(r, static_cast<int>(a));
            if (!c.is_zero()) sparse_add(out, r * right_dim + b, c * v);
        }
    }
    return out;
}

SparseVec sparse_apply_right(const Matrix& g, const SparseVec& x) {
    SparseVec out;
    for (const auto& [idx, v] : x) {
        long long a = idx / g.cols(), b = idx % g.cols();
        for (int r = 0; r < g.rows(); ++r) {
            const Scalar& c = g.at(r, static_cast<int>(b));
            if (!c.is_zero()) sparse_add(out, a * g.rows() + r, c * v);
        }
    }
    return out;
}

SparseVec sparse_middle_swap(long long d1, long long d2, long long d3,
                             long long d4, const SparseVec& x) {
    SparseVec out;
    for (const auto& [idx, v] : x) {
        long long x4 = idx % d4;
        long long rest = idx / d4;
        long long x3 = rest % d3;
        rest /= d3;
        long long x2 = rest % d2;
        long long x1 = rest / d2;
        out.emplace(((x1 * d3 + x3) * d2 + x2) * d4 + x4, v);
    }
    (void)d1;
    return out;
}

}  // namespace maninkit
