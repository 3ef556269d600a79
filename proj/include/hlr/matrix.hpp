#pragma once

#include "hlr/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hlr {

/// Dense rational matrix, row-major. All arithmetic is exact.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    /// Builds from nested initializer-style rows (for tests and the library).
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix column(const Vec& v);
    static Matrix diagonal(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rational>& data() const { return data_; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    bool operator==(const Matrix& rhs) const = default;

    Vec apply(const Vec& v) const;
    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_col(std::size_t j, const Vec& v);

    /// [this | rhs] side by side.
    Matrix hstack(const Matrix& rhs) const;
    /// [this ; rhs] stacked.
    Matrix vstack(const Matrix& rhs) const;
    Matrix cols_subset(const std::vector<std::size_t>& idx) const;

    std::size_t rank() const;
    std::optional<Matrix> inverse() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// One exact solution of A x = b, or absent when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Kernel basis of A as matrix columns (not canonicalized; see Subspace).
Matrix kernel_basis(const Matrix& a);

/// Block-diagonal [a 0; 0 b].
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace hlr
