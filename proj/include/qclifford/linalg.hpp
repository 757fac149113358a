#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qclifford/scalar.hpp"

namespace qcl {

// Dense row-major matrix of exact scalars. Small by construction (at most
// 2^dim square), so no expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

// Gauss-Jordan elimination over Q or Q(i); first nonzero entry is the pivot.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Indices of rows forming a basis of the row space, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& m);

// Any solution of a x = b, free variables set to zero; nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

// Basis of {x : a x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace qcl
