#include "maninkit/subspace.hpp"

#include <sstream>

namespace maninkit {

Subspace Subspace::span(const Matrix& gens) {
    std::vector<Vec> work;
    work.reserve(gens.rows());
    for (int r = 0; r < gens.rows(); ++r) work.push_back(gens.row(r));
    std::vector<int> pivots = rref_in_place(work, gens.cols());
    return Subspace(gens.field(), gens.cols(),
                    Matrix::from_rows(gens.field(), work, gens.cols()),
                    std::move(pivots));
}

Subspace Subspace::span(const Field& f, const std::vector<Vec>& gens,
                        int ambient_dim) {
    return span(Matrix::from_rows(f, gens, ambient_dim));
}

Subspace Subspace::zero(const Field& f, int ambient_dim) {
    return span(Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const Field& f, int ambient_dim) {
    return span(Matrix::identity(f, ambient_dim));
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_dim_ == o.ambient_dim_ &&
           basis_ == o.basis_;
}

Subspace Subspace::kernel(const Matrix& m) {
    std::vector<Vec> work;
    work.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) work.push_back(m.row(r));
    std::vector<int> pivots = rref_in_place(work, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    // One kernel generator per free column: the free column set to 1, pivot
    // columns set so each echelon row evaluates to zero.
    std::vector<Vec> gens;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -work[r][free];
        gens.push_back(std::move(v));
    }
    return span(m.field(), gens, m.cols());
}

Subspace Subspace::annihilator() const {
    return kernel(basis_);
}

Subspace Subspace::sum(const Subspace& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("subspace sum over different fields");
    if (ambient_dim_ != o.ambient_dim_)
        throw DimensionError("subspace sum in different ambient spaces");
    std::vector<Vec> work;
    work.reserve(dim() + o.dim());
    for (int r = 0; r < basis_.rows(); ++r) work.push_back(basis_.row(r));
    for (int r = 0; r < o.basis_.rows(); ++r) work.push_back(o.basis_.row(r));
    return span(field_, work, ambient_dim_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // (U cap W)^perp = U^perp + W^perp, and annihilator is an involution.
    return annihilator().sum(o.annihilator()).annihilator();
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        throw DimensionError("contains: vector length mismatch");
    Vec residue = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Scalar& c = residue[pivots_[r]];
        if (c.is_zero()) continue;
        const Scalar factor = c;
        for (int j = 0; j < ambient_dim_; ++j) {
            const Scalar& b = basis_.at(static_cast<int>(r), j);
            if (b.is_zero()) continue;
            residue[j] -= factor * b;
        }
    }
    for (const Scalar& s : residue)
        if (!s.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    if (!(field_ == o.field_) || ambient_dim_ != o.ambient_dim_) return false;
    for (int r = 0; r < o.basis_.rows(); ++r)
        if (!contains(o.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::kron(const Subspace& a, const Subspace& b) {
    if (!(a.field_ == b.field_))
        throw FieldMismatchError("subspace kron over different fields");
    return span(Matrix::kron(a.basis_, b.basis_));
}

Subspace Subspace::apply(const Matrix& m) const {
    if (m.cols() != ambient_dim_)
        throw DimensionError("subspace apply: map domain mismatch");
    std::vector<Vec> images;
    images.reserve(dim());
    for (int r = 0; r < basis_.rows(); ++r)
        images.push_back(m.apply(basis_.row(r)));
    return span(m.field(), images, m.rows());
}

std::string Subspace::to_string() const {
    if (dim() == 0) return "{0} in dim " + std::to_string(ambient_dim_);
    std::ostringstream out;
    out << "span of " << dim() << " in dim " << ambient_dim_ << ":\n"
        << basis_.to_string();
    return out.str();
}

}  // namespace maninkit
