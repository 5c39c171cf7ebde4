#include "contact_tensor/contact.hpp"

#include "contact_tensor/errors.hpp"

namespace ctensor {

std::string AxiomViolation::to_string() const {
  std::string out = axiom;
  if (i) {
    out += " at (e" + std::to_string(*i + 1);
    if (j) out += ", e" + std::to_string(*j + 1);
    out += ")";
  }
  if (!residual.is_zero()) out += ": residual " + residual.to_string();
  return out;
}

ContactStructure::ContactStructure(FrameManifold base, ExprMatrix phi, VectorField xi)
    : base_(std::move(base)), phi_(std::move(phi)), xi_(std::move(xi)) {
  const std::size_t n = base_.dim();
  if (phi_.rows() != n || phi_.cols() != n)
    throw DimensionError("phi must be " + std::to_string(n) + "x" + std::to_string(n));
  if (xi_.size() != n) throw DimensionError("xi must have " + std::to_string(n) + " components");
  eta_ = base_.lower(xi_);
}

ContactStructure ContactStructure::from_images(FrameManifold base,
                                               const std::vector<VectorField>& images,
                                               VectorField xi) {
  const std::size_t n = base.dim();
  if (images.size() != n)
    throw DimensionError("phi needs " + std::to_string(n) + " images, got " +
                         std::to_string(images.size()));
  ExprMatrix phi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].size() != n)
      throw DimensionError("phi(e" + std::to_string(i + 1) + ") has " +
                           std::to_string(images[i].size()) + " components, expected " +
                           std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) phi(k, i) = images[i][k];
  }
  return ContactStructure(std::move(base), std::move(phi), std::move(xi));
}

VectorField ContactStructure::apply(const ExprMatrix& m, const VectorField& x) {
  return VectorField(m * x.components());
}

Expr ContactStructure::eta_of(const VectorField& x) const {
  Expr out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !eta_[i].is_zero()) out += x[i] * eta_[i];
  return out;
}

VectorField ContactStructure::phi_image(std::size_t i) const { return VectorField(phi_.column(i)); }

ContactStructure substitute(const ContactStructure& c, const std::map<Var, Expr>& replacements) {
  const FrameManifold& m = c.base();
  const std::size_t n = m.dim();
  auto sub_matrix = [&](const ExprMatrix& a) {
    ExprMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) = substitute(a(r, k), replacements);
    return out;
  };
  std::optional<FrameManifold> base;
  if (m.mode() == FrameMode::chart) {
    base = FrameManifold::chart(m.symbols(), sub_matrix(m.frame_matrix()), sub_matrix(m.metric()));
  } else {
    StructureConstants sc(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        VectorField v = m.structure().bracket(i, j);
        for (std::size_t k = 0; k < n; ++k) v[k] = substitute(v[k], replacements);
        sc.set_bracket(i, j, v);
      }
    base = FrameManifold::abstract(m.symbols(), std::move(sc), sub_matrix(m.metric()));
  }
  VectorField xi = c.xi();
  for (std::size_t k = 0; k < n; ++k) xi[k] = substitute(xi[k], replacements);
  return ContactStructure(std::move(*base), sub_matrix(c.phi()), std::move(xi));
}

ValidationVerdict validate_almost_contact(const ContactStructure& c) {
  const std::size_t n = c.dim();
  const FrameManifold& m = c.base();
  ValidationVerdict v;
  auto fail = [&](std::string axiom, std::optional<std::size_t> i, std::optional<std::size_t> j,
                  Expr residual) {
    v.violations.push_back({std::move(axiom), i, j, std::move(residual)});
  };

  const Expr norm = c.eta_of(c.xi()) - Expr(1);
  if (!norm.is_zero()) fail("eta(xi) = 1", std::nullopt, std::nullopt, norm);

  for (std::size_t i = 0; i < n; ++i) {
    const VectorField ei = m.basis(i);
    VectorField lhs = c.apply_phi(c.apply_phi(ei));
    VectorField rhs = -ei + c.eta()[i] * c.xi();
    VectorField diff = lhs - rhs;
    for (std::size_t k = 0; k < n; ++k)
      if (!diff[k].is_zero()) {
        fail("phi^2 = -Id + eta(x)xi", i, std::nullopt, diff[k]);
        break;
      }
  }

  const VectorField phi_xi = c.apply_phi(c.xi());
  for (std::size_t k = 0; k < n; ++k)
    if (!phi_xi[k].is_zero()) {
      fail("phi xi = 0", std::nullopt, std::nullopt, phi_xi[k]);
      break;
    }

  for (std::size_t i = 0; i < n; ++i) {
    const Expr e = c.eta_of(c.phi_image(i));
    if (!e.is_zero()) fail("eta o phi = 0", i, std::nullopt, e);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Expr r = m.inner(c.phi_image(i), c.phi_image(j)) - m.metric()(i, j) +
                     c.eta()[i] * c.eta()[j];
      if (!r.is_zero()) fail("g(phi X, phi Y) = g(X, Y) - eta(X)eta(Y)", i, j, r);
    }
  return v;
}

Expr d_eta(const ContactStructure& c, std::size_t i, std::size_t j) {
  const FrameManifold& m = c.base();
  Expr bracket_term;
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!m.structure()(i, j, k).is_zero()) bracket_term += m.structure()(i, j, k) * c.eta()[k];
  return Expr::rational(1, 2) *
         (m.directional_derivative(i, c.eta()[j]) - m.directional_derivative(j, c.eta()[i]) -
          bracket_term);
}

ValidationVerdict check_contact_metric(const ContactStructure& c) {
  ValidationVerdict v;
  const FrameManifold& m = c.base();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      const Expr r = d_eta(c, i, j) - m.inner(m.basis(i), c.phi_image(j));
      if (!r.is_zero()) v.violations.push_back({"d eta(X, Y) = g(X, phi Y)", i, j, r});
    }
  return v;
}

ExprMatrix lie_h(const ContactStructure& c) {
  const std::size_t n = c.dim();
  const FrameManifold& m = c.base();
  ExprMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    VectorField col = m.bracket(c.xi(), c.phi_image(i)) - c.apply_phi(m.bracket(c.xi(), m.basis(i)));
    for (std::size_t k = 0; k < n; ++k) h(k, i) = Expr::rational(1, 2) * col[k];
  }
  return h;
}

ValidationVerdict check_h(const ContactStructure& c, const ExprMatrix& h) {
  const std::size_t n = c.dim();
  const FrameManifold& m = c.base();
  ValidationVerdict v;
  const VectorField h_xi = ContactStructure::apply(h, c.xi());
  for (std::size_t k = 0; k < n; ++k)
    if (!h_xi[k].is_zero()) {
      v.violations.push_back({"h xi = 0", std::nullopt, std::nullopt, h_xi[k]});
      break;
    }
  const ExprMatrix anti = h * c.phi() + c.phi() * h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!anti(k, i).is_zero()) {
        v.violations.push_back({"h phi = -phi h", i, std::nullopt, anti(k, i)});
        k = n;
      }
  const Expr tr = h.trace();
  if (!tr.is_zero()) v.violations.push_back({"tr h = 0", std::nullopt, std::nullopt, tr});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VectorField hi(h.column(i));
      const VectorField hj(h.column(j));
      const Expr r = m.inner(hi, m.basis(j)) - m.inner(m.basis(i), hj);
      if (!r.is_zero()) v.violations.push_back({"g(hX, Y) = g(X, hY)", i, j, r});
    }
  return v;
}

ExprMatrix compute_h(const ContactStructure& c) {
  ExprMatrix h = lie_h(c);
  const ValidationVerdict v = check_h(c, h);
  if (!v.ok()) throw Error("operator h violates " + v.violations.front().to_string());
  return h;
}

HEigenstructure h_eigenstructure(const ExprMatrix& h) {
  if (!h.is_square()) throw DimensionError("h must be square");
  if (!h.is_diagonal()) throw Unsupported("unsupported: re-express frame in h-eigenbasis");
  HEigenstructure out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const Expr& d = h(i, i);
    if (d.is_zero()) continue;
    if (d.numerator().leading_coeff() > 0) {
      out.lambda = d;
      break;
    }
    out.lambda = -d;
  }
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const Expr& d = h(i, i);
    if (d.is_zero())
      out.zero.push_back(i);
    else if (d == out.lambda)
      out.plus.push_back(i);
    else if (d == -out.lambda)
      out.minus.push_back(i);
    else
      throw Unsupported("h has more than one nonzero eigenvalue pair");
  }
  return out;
}

}  // namespace ctensor
