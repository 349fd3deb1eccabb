/**
 * @file linalg.hpp
 * @brief Small dense exact linear algebra over Scalar: reduction, kernel,
 *        rank, inverse, solve. Everything is fraction-free-by-field (the
 *        field ops are exact), so results are exact.
 */
#pragma once

#include <optional>
#include <vector>

#include "qd/scalar.hpp"

namespace qd {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f),
          data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(int n, const FieldSpec& f) {
        Matrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Matrix power(long e) const; // e >= 0, square only

    bool is_zero() const;
    bool is_diagonal() const;

    int rank() const;
    // Basis of the right kernel {v : Av = 0}, as column vectors.
    std::vector<std::vector<Scalar>> kernel() const;
    std::optional<Matrix> inverse() const;
    // Solves A x = b; nullopt if inconsistent (least constrained solution
    // with free variables set to zero).
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

} // namespace qd
