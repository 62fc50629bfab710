#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maninkit/scalar.hpp"

namespace maninkit {

using Vec = std::vector<Scalar>;

// Dense matrix over one exact field, row-major.  Dimensions in scope stay in
// the low thousands; sparsity is exploited by skipping zero entries in inner
// loops, not by a sparse storage format.
class Matrix {
public:
    Matrix(const Field& f, int rows, int cols);  // zero-filled

    static Matrix identity(const Field& f, int n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows,
                            int cols);
    static Matrix row_vector(const Vec& v);
    static Matrix col_vector(const Vec& v);
    // e_j |-> e_{image[j]} as a cols=|image| matrix with the given row count.
    static Matrix basis_permutation(const Field& f, int rows,
                                    const std::vector<int>& image);
    static Matrix kron(const Matrix& a, const Matrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Vec apply(const Vec& v) const;
    Vec row(int r) const;
    Vec col(int c) const;

    // Unique reduced row-echelon form with zero rows dropped; the returned
    // matrix keeps the column count.  Row space is preserved.
    Matrix rref() const;
    int rank() const;

    std::string to_string() const;  // aligned, one line per row

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Scalar> data_;
};

// In-place Gauss-Jordan elimination used by rref/kernel; returns the pivot
// column of each surviving row, in order.
std::vector<int> rref_in_place(std::vector<Vec>& rows, int cols);

}  // namespace maninkit
