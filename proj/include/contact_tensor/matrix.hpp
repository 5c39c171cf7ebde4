#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "contact_tensor/expr.hpp"

namespace ctensor {

/// Dense row-major matrix of Exprs.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExprMatrix identity(std::size_t n);
  static ExprMatrix from_rows(const std::vector<std::vector<Expr>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Expr& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Expr& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Expr> row(std::size_t r) const;
  std::vector<Expr> column(std::size_t c) const;
  ExprMatrix transposed() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  Expr trace() const;

  friend ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
  friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
  friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
  friend ExprMatrix operator*(const Expr& s, const ExprMatrix& m);
  /// Matrix times column vector.
  friend std::vector<Expr> operator*(const ExprMatrix& m, const std::vector<Expr>& v);
  friend bool operator==(const ExprMatrix&, const ExprMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expr> data_;
};

/// Determinant by Bareiss fraction-free elimination.
Expr determinant(const ExprMatrix& m);

/// Inverse by fraction-free forward elimination and exact back substitution.
/// Throws SingularMatrix (message names the vanishing determinant) when the
/// determinant is identically zero.
ExprMatrix inverse(const ExprMatrix& m);

}  // namespace ctensor
