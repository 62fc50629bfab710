#include "maninkit/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace maninkit {

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionError("negative matrix dimensions");
    data_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows,
                         int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw DimensionError("row length does not match column count");
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::row_vector(const Vec& v) {
    if (v.empty()) throw DimensionError("empty row vector");
    return from_rows(v.front().field(), {v}, static_cast<int>(v.size()));
}

Matrix Matrix::col_vector(const Vec& v) {
    if (v.empty()) throw DimensionError("empty column vector");
    Matrix m(v.front().field(), static_cast<int>(v.size()), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(static_cast<int>(r), 0) = v[r];
    return m;
}

Matrix Matrix::basis_permutation(const Field& f, int rows,
                                 const std::vector<int>& image) {
    Matrix m(f, rows, static_cast<int>(image.size()));
    for (std::size_t j = 0; j < image.size(); ++j) {
        if (image[j] < 0 || image[j] >= rows)
            throw DimensionError("basis permutation image out of range");
        m.at(image[j], static_cast<int>(j)) = Scalar::one(f);
    }
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw FieldMismatchError("kron: operands over different fields");
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    m.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("matrix product over different fields");
    if (cols_ != o.rows_)
        throw DimensionError("matrix product shape mismatch: " +
                             std::to_string(cols_) + " vs " +
                             std::to_string(o.rows_));
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("matrix sum over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("matrix difference over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= c;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    return data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Scalar& s) { return s.is_zero(); });
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionError("matrix apply: vector length mismatch");
    Vec out(static_cast<std::size_t>(rows_), Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Scalar& aij = at(i, j);
            if (aij.is_zero()) continue;
            out[i] += aij * v[j];
        }
    }
    return out;
}

Vec Matrix::row(int r) const {
    Vec v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(int c) const {
    Vec v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

std::vector<int> rref_in_place(std::vector<Vec>& rows, int cols) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols && lead < static_cast<int>(rows.size());
         ++col) {
        int pivot = -1;
        for (int r = lead; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[lead], rows[pivot]);
        Scalar inv = rows[lead][col].inverse();
        for (int c = col; c < cols; ++c)
            if (!rows[lead][c].is_zero()) rows[lead][c] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == lead) continue;
            const Scalar factor = rows[r][col];
            if (factor.is_zero()) continue;
            for (int c = col; c < cols; ++c) {
                if (rows[lead][c].is_zero()) continue;
                rows[r][c] -= factor * rows[lead][c];
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

Matrix Matrix::rref() const {
    std::vector<Vec> work;
    work.reserve(rows_);
    for (int r = 0; r < rows_; ++r) work.push_back(row(r));
    rref_in_place(work, cols_);
    return from_rows(field_, work, cols_);
}

int Matrix::rank() const {
    std::vector<Vec> work;
    work.reserve(rows_);
    for (int r = 0; r < rows_; ++r) work.push_back(row(r));
    return static_cast<int>(rref_in_place(work, cols_).size());
}

std::string Matrix::to_string() const {
    std::vector<std::vector<std::string>> cells(rows_);
    std::vector<std::size_t> width(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        cells[i].reserve(cols_);
        for (int j = 0; j < cols_; ++j) {
            cells[i].push_back(at(i, j).to_string());
            width[j] = std::max(width[j], cells[i].back().size());
        }
    }
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << std::string(width[j] - cells[i][j].size(), ' ')
                << cells[i][j];
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

}  // namespace maninkit
