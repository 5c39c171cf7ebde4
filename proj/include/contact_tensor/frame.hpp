#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "contact_tensor/expr.hpp"
#include "contact_tensor/matrix.hpp"

namespace ctensor {

/// Components of a frame-indexed object. VectorField holds X^i with
/// X = sum_i X^i e_i; OneForm holds w(e_i).
template <class Tag>
class FrameComponents {
 public:
  FrameComponents() = default;
  explicit FrameComponents(std::size_t dim) : c_(dim) {}
  explicit FrameComponents(std::vector<Expr> components) : c_(std::move(components)) {}
  static FrameComponents basis(std::size_t dim, std::size_t i) {
    FrameComponents v(dim);
    v.c_[i] = Expr(1);
    return v;
  }

  std::size_t size() const { return c_.size(); }
  Expr& operator[](std::size_t i) { return c_[i]; }
  const Expr& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Expr>& components() const { return c_; }
  bool is_zero() const {
    for (const auto& e : c_)
      if (!e.is_zero()) return false;
    return true;
  }

  FrameComponents& operator+=(const FrameComponents& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  FrameComponents& operator-=(const FrameComponents& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend FrameComponents operator+(FrameComponents a, const FrameComponents& b) { return a += b; }
  friend FrameComponents operator-(FrameComponents a, const FrameComponents& b) { return a -= b; }
  friend FrameComponents operator-(FrameComponents a) {
    for (auto& e : a.c_) e = -e;
    return a;
  }
  friend FrameComponents operator*(const Expr& s, FrameComponents a) {
    for (auto& e : a.c_) e *= s;
    return a;
  }
  friend bool operator==(const FrameComponents&, const FrameComponents&) = default;

 private:
  std::vector<Expr> c_;
};

struct VectorTag;
struct OneFormTag;
using VectorField = FrameComponents<VectorTag>;
using OneForm = FrameComponents<OneFormTag>;

/// Structure functions C^k_{ij} with [e_i, e_j] = sum_k C^k_{ij} e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Expr& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets [e_i, e_j] and, antisymmetrically, [e_j, e_i].
  void set_bracket(std::size_t i, std::size_t j, const VectorField& value);
  VectorField bracket(std::size_t i, std::size_t j) const;
  bool is_antisymmetric() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  Expr& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  std::size_t dim_ = 0;
  std::vector<Expr> data_;
};

enum class FrameMode { abstract, chart };

std::string_view to_string(FrameMode mode);

/// Manifold described by a global frame e_1..e_n and the frame metric
/// g_{ij} = g(e_i, e_j). In chart mode the frame is realized on coordinates
/// (e_i = sum_a f_i^a d/dx^a) and brackets are derived; in abstract mode the
/// structure functions are given and must be constant.
class FrameManifold {
 public:
  /// Throws Error/DimensionError/SingularMatrix on invalid input. The Jacobi
  /// identity is not enforced here; see check_jacobi.
  static FrameManifold abstract(SymbolTable symbols, StructureConstants structure, ExprMatrix metric);
  /// `frame` row i holds the coordinate components f_i^a of e_i, columns in
  /// the declaration order of the coordinate symbols.
  static FrameManifold chart(SymbolTable symbols, ExprMatrix frame, ExprMatrix metric);

  std::size_t dim() const { return dim_; }
  FrameMode mode() const { return mode_; }
  const SymbolTable& symbols() const { return symbols_; }
  const StructureConstants& structure() const { return structure_; }
  const ExprMatrix& metric() const { return metric_; }
  const ExprMatrix& metric_inverse() const { return metric_inverse_; }
  /// Chart mode only; empty otherwise.
  const ExprMatrix& frame_matrix() const { return frame_; }
  const std::vector<Symbol>& coordinates() const { return coordinates_; }

  VectorField basis(std::size_t i) const { return VectorField::basis(dim_, i); }
  VectorField zero_vector() const { return VectorField(dim_); }

  /// e_i(f).
  Expr directional_derivative(std::size_t i, const Expr& f) const;
  /// X(f) = sum_i X^i e_i(f).
  Expr derivative_along(const VectorField& x, const Expr& f) const;
  /// Lie bracket via the Leibniz rule over the structure functions.
  VectorField bracket(const VectorField& x, const VectorField& y) const;
  /// g(X, Y).
  Expr inner(const VectorField& x, const VectorField& y) const;
  /// Metric dual of X: the one-form g(X, .).
  OneForm lower(const VectorField& x) const;
  /// True when every structure function and metric entry is free of coordinates.
  bool is_constant_structure() const;

 private:
  FrameManifold() = default;
  void validate_metric();

  std::size_t dim_ = 0;
  FrameMode mode_ = FrameMode::abstract;
  SymbolTable symbols_;
  std::vector<Symbol> coordinates_;
  ExprMatrix frame_;
  StructureConstants structure_;
  ExprMatrix metric_;
  ExprMatrix metric_inverse_;
};

/// Structure functions of a chart frame: the coordinate commutator
/// [e_i, e_j]^a = e_i(f_j^a) - e_j(f_i^a) re-expressed in the frame through
/// the inverse of the frame matrix. Throws SingularMatrix if the frame
/// matrix is not invertible.
StructureConstants brackets_from_chart(const SymbolTable& symbols, const ExprMatrix& frame);

struct JacobiVerdict {
  /// Lexicographically smallest violating triple i < j < k, if any.
  std::optional<std::array<std::size_t, 3>> violation;
  VectorField residual;
  bool ok() const { return !violation.has_value(); }
};

/// Checks sum over cyclic permutations of [e_i, [e_j, e_k]] = 0.
JacobiVerdict check_jacobi(const FrameManifold& m);

}  // namespace ctensor
