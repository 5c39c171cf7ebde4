#include "contact_tensor/matrix.hpp"

#include <utility>

#include "contact_tensor/errors.hpp"

namespace ctensor {

ExprMatrix ExprMatrix::identity(std::size_t n) {
  ExprMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
  return m;
}

ExprMatrix ExprMatrix::from_rows(const std::vector<std::vector<Expr>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExprMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Expr> ExprMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Expr> ExprMatrix::column(std::size_t c) const {
  std::vector<Expr> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExprMatrix ExprMatrix::transposed() const {
  ExprMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExprMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExprMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r))) return false;
  return true;
}

bool ExprMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Expr ExprMatrix::trace() const {
  Expr t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  ExprMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  ExprMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch");
  ExprMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

ExprMatrix operator*(const Expr& s, const ExprMatrix& m) {
  ExprMatrix out = m;
  for (auto& e : out.data_) e *= s;
  return out;
}

std::vector<Expr> operator*(const ExprMatrix& m, const std::vector<Expr>& v) {
  if (m.cols_ != v.size()) throw DimensionError("matrix/vector shape mismatch");
  std::vector<Expr> out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t k = 0; k < m.cols_; ++k)
      if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
  return out;
}

namespace {

/// Bareiss elimination in place over the first `pivots` columns. Returns the
/// sign of the row permutation, or 0 if a pivot column is identically zero.
int bareiss(ExprMatrix& m, std::size_t pivots) {
  int sign = 1;
  Expr previous(1);
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = k;
    while (p < m.rows() && m(p, k).is_zero()) ++p;
    if (p == m.rows()) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t c = k + 1; c < m.cols(); ++c)
        m(i, c) = (m(k, k) * m(i, c) - m(i, k) * m(k, c)) / previous;
      m(i, k) = Expr();
    }
    previous = m(k, k);
  }
  return sign;
}

}  // namespace

Expr determinant(const ExprMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Expr(1);
  ExprMatrix work = m;
  const int sign = bareiss(work, m.rows());
  if (sign == 0) return Expr();
  const Expr& last = work(m.rows() - 1, m.rows() - 1);
  return sign > 0 ? last : -last;
}

ExprMatrix inverse(const ExprMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExprMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Expr(1);
  }
  if (bareiss(aug, n) == 0 || (n > 0 && aug(n - 1, n - 1).is_zero()))
    throw SingularMatrix("matrix is singular: determinant " + determinant(m).to_string() +
                         " vanishes identically");
  ExprMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ri = n; ri-- > 0;) {
      Expr acc = aug(ri, n + c);
      for (std::size_t k = ri + 1; k < n; ++k) acc -= aug(ri, k) * out(k, c);
      out(ri, c) = acc / aug(ri, ri);
    }
  }
  return out;
}

}  // namespace ctensor
