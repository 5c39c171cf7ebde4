#include "contact_tensor/frame.hpp"

#include "contact_tensor/errors.hpp"

namespace ctensor {

std::string_view to_string(FrameMode mode) { return mode == FrameMode::chart ? "chart" : "abstract"; }

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const VectorField& value) {
  if (value.size() != dim_) throw DimensionError("bracket value has wrong dimension");
  if (i == j && !value.is_zero()) throw Error("[e_i, e_i] must vanish");
  for (std::size_t k = 0; k < dim_; ++k) {
    at(i, j, k) = value[k];
    at(j, i, k) = -value[k];
  }
}

VectorField StructureConstants::bracket(std::size_t i, std::size_t j) const {
  VectorField v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!((*this)(i, j, k) + (*this)(j, i, k)).is_zero()) return false;
  return true;
}

void FrameManifold::validate_metric() {
  if (metric_.rows() != dim_ || metric_.cols() != dim_)
    throw DimensionError("metric must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
  if (!metric_.is_symmetric()) throw Error("metric matrix is not symmetric");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!metric_(i, j).is_parameter_only(symbols_))
        throw Error("metric entry g(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                    ") depends on a coordinate; frame metrics must be constant");
  try {
    metric_inverse_ = inverse(metric_);
  } catch (const SingularMatrix& e) {
    throw SingularMatrix(std::string("metric: ") + e.what());
  }
}

FrameManifold FrameManifold::abstract(SymbolTable symbols, StructureConstants structure,
                                      ExprMatrix metric) {
  FrameManifold m;
  m.dim_ = structure.dim();
  if (m.dim_ == 0) throw DimensionError("dimension must be positive");
  m.mode_ = FrameMode::abstract;
  m.symbols_ = std::move(symbols);
  m.structure_ = std::move(structure);
  m.metric_ = std::move(metric);
  if (!m.structure_.is_antisymmetric()) throw Error("structure functions are not antisymmetric");
  for (std::size_t i = 0; i < m.dim_; ++i)
    for (std::size_t j = 0; j < m.dim_; ++j)
      for (std::size_t k = 0; k < m.dim_; ++k)
        if (!m.structure_(i, j, k).is_parameter_only(m.symbols_))
          throw Error("abstract structure function depends on a coordinate");
  m.validate_metric();
  return m;
}

FrameManifold FrameManifold::chart(SymbolTable symbols, ExprMatrix frame, ExprMatrix metric) {
  FrameManifold m;
  m.dim_ = frame.rows();
  if (m.dim_ == 0) throw DimensionError("dimension must be positive");
  m.mode_ = FrameMode::chart;
  m.symbols_ = std::move(symbols);
  m.coordinates_ = m.symbols_.coordinates();
  if (m.coordinates_.size() != m.dim_)
    throw DimensionError("chart mode needs exactly " + std::to_string(m.dim_) +
                         " coordinate symbols, found " + std::to_string(m.coordinates_.size()));
  if (frame.cols() != m.dim_) throw DimensionError("frame matrix must be square");
  m.structure_ = brackets_from_chart(m.symbols_, frame);
  m.frame_ = std::move(frame);
  m.metric_ = std::move(metric);
  m.validate_metric();
  return m;
}

Expr FrameManifold::directional_derivative(std::size_t i, const Expr& f) const {
  if (f.is_constant()) return Expr();
  if (mode_ == FrameMode::abstract) {
    if (!f.is_parameter_only(symbols_))
      throw Error("coordinate-dependent function " + f.to_string() + " in abstract mode");
    return Expr();
  }
  Expr out;
  for (std::size_t a = 0; a < dim_; ++a)
    if (!frame_(i, a).is_zero()) out += frame_(i, a) * diff(f, coordinates_[a]);
  return out;
}

Expr FrameManifold::derivative_along(const VectorField& x, const Expr& f) const {
  Expr out;
  if (f.is_constant()) return out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) out += x[i] * directional_derivative(i, f);
  return out;
}

VectorField FrameManifold::bracket(const VectorField& x, const VectorField& y) const {
  VectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    out[k] = derivative_along(x, y[k]) - derivative_along(y, x[k]);
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Expr xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!structure_(i, j, k).is_zero()) out[k] += xy * structure_(i, j, k);
    }
  }
  return out;
}

Expr FrameManifold::inner(const VectorField& x, const VectorField& y) const {
  Expr out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!y[j].is_zero() && !metric_(i, j).is_zero()) out += x[i] * y[j] * metric_(i, j);
  }
  return out;
}

OneForm FrameManifold::lower(const VectorField& x) const {
  OneForm w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) w[j] = inner(x, basis(j));
  return w;
}

bool FrameManifold::is_constant_structure() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!structure_(i, j, k).is_parameter_only(symbols_)) return false;
  return true;
}

StructureConstants brackets_from_chart(const SymbolTable& symbols, const ExprMatrix& frame) {
  const std::size_t n = frame.rows();
  const std::vector<Symbol> coords = symbols.coordinates();
  if (frame.cols() != n || coords.size() != n)
    throw DimensionError("frame matrix must be square over the chart coordinates");
  ExprMatrix inv;
  try {
    inv = inverse(frame);
  } catch (const SingularMatrix& e) {
    throw SingularMatrix(std::string("frame matrix: ") + e.what());
  }
  auto apply = [&](std::size_t i, const Expr& f) {
    Expr out;
    for (std::size_t a = 0; a < n; ++a)
      if (!frame(i, a).is_zero()) out += frame(i, a) * diff(f, coords[a]);
    return out;
  };
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Expr> coordinate_bracket(n);
      for (std::size_t a = 0; a < n; ++a)
        coordinate_bracket[a] = apply(i, frame(j, a)) - apply(j, frame(i, a));
      // d/dx^a = sum_k inv(a, k) e_k
      VectorField in_frame(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
          if (!coordinate_bracket[a].is_zero()) in_frame[k] += coordinate_bracket[a] * inv(a, k);
      c.set_bracket(i, j, in_frame);
    }
  }
  return c;
}

JacobiVerdict check_jacobi(const FrameManifold& m) {
  const std::size_t n = m.dim();
  JacobiVerdict verdict;
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    return m.bracket(m.basis(a), m.structure().bracket(b, c));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorField sum = nested(i, j, k) + nested(j, k, i) + nested(k, i, j);
        if (!sum.is_zero()) {
          verdict.violation = std::array<std::size_t, 3>{i, j, k};
          verdict.residual = std::move(sum);
          return verdict;
        }
      }
  return verdict;
}

}  // namespace ctensor
