#include "contact_tensor/curvature.hpp"

#include <string>

#include "contact_tensor/errors.hpp"

namespace ctensor {

namespace {

std::string e(std::size_t i) { return "e" + std::to_string(i + 1); }

/// Names the first nonzero component of v.
std::string describe(const std::string& label, const VectorField& v) {
  for (std::size_t l = 0; l < v.size(); ++l)
    if (!v[l].is_zero())
      return label + " has " + e(l) + "-component " + v[l].to_string() + ", expected 0";
  return label;
}

/// (nabla_{e_i} T)(e_j) = nabla_{e_i}(T e_j) - T(nabla_{e_i} e_j).
VectorField nabla_tensor(const FrameManifold& m, const ConnectionTable& conn, const ExprMatrix& t,
                         std::size_t i, std::size_t j) {
  const VectorField tej(t.column(j));
  return covariant_derivative_vf(m, conn, m.basis(i), tej) -
         ContactStructure::apply(t, conn.nabla(i, j));
}

/// (nabla_X T)Y by tensoriality in X and Y.
VectorField nabla_tensor(const FrameManifold& m, const ConnectionTable& conn, const ExprMatrix& t,
                         const VectorField& x, const VectorField& y) {
  VectorField out = m.zero_vector();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!y[j].is_zero()) out += (x[i] * y[j]) * nabla_tensor(m, conn, t, i, j);
  }
  return out;
}

}  // namespace

VectorField ConnectionTable::nabla(std::size_t i, std::size_t j) const {
  VectorField v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

VectorField RiemannTensor::apply(const VectorField& x, const VectorField& y,
                                 const VectorField& z) const {
  VectorField out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (!z[k].is_zero()) out += (x[i] * y[j] * z[k]) * (*this)(i, j, k);
    }
  }
  return out;
}

bool RiemannTensor::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

ConnectionTable koszul(const FrameManifold& m, ExecPolicy policy) {
  const std::size_t n = m.dim();
  const ExprMatrix& g = m.metric();
  const ExprMatrix& ginv = m.metric_inverse();
  const StructureConstants& c = m.structure();
  // g(e_a, [e_b, e_c])
  auto g_bracket = [&](std::size_t a, std::size_t b, std::size_t cc) {
    Expr out;
    for (std::size_t s = 0; s < n; ++s)
      if (!c(b, cc, s).is_zero() && !g(a, s).is_zero()) out += c(b, cc, s) * g(a, s);
    return out;
  };
  ConnectionTable conn(n);
  for_each_index(policy, n * n, [&](std::size_t ij) {
    const std::size_t i = ij / n;
    const std::size_t j = ij % n;
    std::vector<Expr> lowered(n);  // g(nabla_i e_j, e_k)
    for (std::size_t k = 0; k < n; ++k) {
      Expr twice = m.directional_derivative(i, g(j, k)) + m.directional_derivative(j, g(k, i)) -
                   m.directional_derivative(k, g(i, j)) - g_bracket(i, j, k) -
                   g_bracket(j, i, k) + g_bracket(k, i, j);
      lowered[k] = Expr::rational(1, 2) * twice;
    }
    for (std::size_t l = 0; l < n; ++l) {
      Expr acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!ginv(l, k).is_zero() && !lowered[k].is_zero()) acc += ginv(l, k) * lowered[k];
      conn(i, j, l) = acc;
    }
  });
  return conn;
}

VectorField covariant_derivative_vf(const FrameManifold& m, const ConnectionTable& conn,
                                    const VectorField& x, const VectorField& y) {
  const std::size_t n = m.dim();
  VectorField out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = m.derivative_along(x, y[k]);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Expr xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!conn(i, j, k).is_zero()) out[k] += xy * conn(i, j, k);
    }
  }
  return out;
}

RiemannTensor riemann(const FrameManifold& m, const ConnectionTable& conn, ExecPolicy policy) {
  const std::size_t n = m.dim();
  const StructureConstants& c = m.structure();
  RiemannTensor r(n);
  for_each_index(policy, n * n * n, [&](std::size_t ijk) {
    const std::size_t i = ijk / (n * n);
    const std::size_t j = (ijk / n) % n;
    const std::size_t k = ijk % n;
    VectorField out(n);
    if (i == j) {
      r(i, j, k) = out;
      return;
    }
    for (std::size_t l = 0; l < n; ++l) {
      Expr acc = m.directional_derivative(i, conn(j, k, l)) - m.directional_derivative(j, conn(i, k, l));
      for (std::size_t s = 0; s < n; ++s) {
        if (!conn(j, k, s).is_zero() && !conn(i, s, l).is_zero()) acc += conn(j, k, s) * conn(i, s, l);
        if (!conn(i, k, s).is_zero() && !conn(j, s, l).is_zero()) acc -= conn(i, k, s) * conn(j, s, l);
        if (!c(i, j, s).is_zero() && !conn(s, k, l).is_zero()) acc -= c(i, j, s) * conn(s, k, l);
      }
      out[l] = acc;
    }
    r(i, j, k) = std::move(out);
  });
  return r;
}

RicciData ricci_scalar(const FrameManifold& m, const RiemannTensor& r) {
  const std::size_t n = m.dim();
  RicciData d;
  d.ricci = ExprMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Expr acc;
      for (std::size_t i = 0; i < n; ++i) acc += r(i, j, k)[i];
      d.ricci(j, k) = acc;
    }
  d.operator_ = ExprMatrix(n, n);
  const ExprMatrix& ginv = m.metric_inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Expr acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!d.ricci(i, k).is_zero() && !ginv(k, j).is_zero()) acc += d.ricci(i, k) * ginv(k, j);
      d.operator_(j, i) = acc;
    }
  d.scalar = d.operator_.trace();
  return d;
}

VectorField nabla_R_component(const FrameManifold& m, const ConnectionTable& conn,
                              const RiemannTensor& r, std::size_t w, std::size_t i, std::size_t j,
                              std::size_t k) {
  const std::size_t n = m.dim();
  VectorField out = covariant_derivative_vf(m, conn, m.basis(w), r(i, j, k));
  for (std::size_t s = 0; s < n; ++s) {
    if (!conn(w, i, s).is_zero()) out -= conn(w, i, s) * r(s, j, k);
    if (!conn(w, j, s).is_zero()) out -= conn(w, j, s) * r(i, s, k);
    if (!conn(w, k, s).is_zero()) out -= conn(w, k, s) * r(i, j, s);
  }
  return out;
}

CurvatureTables::CurvatureTables(FrameManifold m, ExecPolicy policy)
    : manifold_(std::move(m)),
      connection_(koszul(manifold_, policy)),
      riemann_(ctensor::riemann(manifold_, connection_, policy)),
      ricci_(ricci_scalar(manifold_, riemann_)),
      memo_(std::make_shared<Memo>()) {
  const std::size_t n = dim();
  memo_->slots.resize(n * n * n * n);
}

VectorField CurvatureTables::nabla_R(std::size_t w, std::size_t i, std::size_t j,
                                     std::size_t k) const {
  const std::size_t s = slot(w, i, j, k);
  {
    std::lock_guard lock(memo_->mutex);
    if (memo_->slots[s]) return *memo_->slots[s];
  }
  VectorField v = nabla_R_component(manifold_, connection_, riemann_, w, i, j, k);
  std::lock_guard lock(memo_->mutex);
  if (!memo_->slots[s]) memo_->slots[s] = v;
  return v;
}

void CurvatureTables::compute_all_nabla_R(ExecPolicy policy) const {
  const std::size_t n = dim();
  for_each_index(policy, n * n * n * n, [&](std::size_t s) {
    nabla_R(s / (n * n * n), (s / (n * n)) % n, (s / n) % n, s % n);
  });
}

std::vector<Check> check_connection(const FrameManifold& m, const ConnectionTable& conn) {
  const std::size_t n = m.dim();
  const ExprMatrix& g = m.metric();
  Check torsion{"torsion-free", true, ""};
  for (std::size_t i = 0; i < n && torsion.passed; ++i)
    for (std::size_t j = i + 1; j < n && torsion.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Expr r = conn(i, j, k) - conn(j, i, k) - m.structure()(i, j, k);
        if (!r.is_zero()) {
          torsion.passed = false;
          torsion.detail = "T(" + e(i) + "," + e(j) + ") has " + e(k) + "-component " + r.to_string();
          break;
        }
      }
  Check compat{"metric compatibility", true, ""};
  for (std::size_t i = 0; i < n && compat.passed; ++i)
    for (std::size_t j = 0; j < n && compat.passed; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Expr r = m.directional_derivative(i, g(j, k));
        for (std::size_t l = 0; l < n; ++l) r -= conn(i, j, l) * g(l, k) + conn(i, k, l) * g(j, l);
        if (!r.is_zero()) {
          compat.passed = false;
          compat.detail = "(nabla_" + e(i) + " g)(" + e(j) + "," + e(k) + ") = " + r.to_string();
          break;
        }
      }
  return {torsion, compat};
}

std::vector<Check> check_curvature_symmetries(const CurvatureTables& t) {
  const std::size_t n = t.dim();
  const FrameManifold& m = t.manifold();
  const RiemannTensor& r = t.riemann();
  auto label = [](std::size_t i, std::size_t j, std::size_t k) {
    return "R(" + e(i) + "," + e(j) + ")" + e(k);
  };

  Check anti{"R(X,Y) = -R(Y,X)", true, ""};
  for (std::size_t i = 0; i < n && anti.passed; ++i)
    for (std::size_t j = i; j < n && anti.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const VectorField s = r(i, j, k) + r(j, i, k);
        if (!s.is_zero()) {
          anti.passed = false;
          anti.detail = describe(label(i, j, k) + " + " + label(j, i, k), s);
          break;
        }
      }

  Check skew{"g(R(X,Y)Z, W) = -g(R(X,Y)W, Z)", true, ""};
  for (std::size_t i = 0; i < n && skew.passed; ++i)
    for (std::size_t j = i + 1; j < n && skew.passed; ++j)
      for (std::size_t k = 0; k < n && skew.passed; ++k)
        for (std::size_t l = k; l < n; ++l) {
          const Expr s = m.inner(r(i, j, k), m.basis(l)) + m.inner(r(i, j, l), m.basis(k));
          if (!s.is_zero()) {
            skew.passed = false;
            skew.detail = "g(" + label(i, j, k) + "," + e(l) + ") + g(" + label(i, j, l) + "," +
                          e(k) + ") = " + s.to_string();
            break;
          }
        }

  Check bianchi1{"first Bianchi identity", true, ""};
  for (std::size_t i = 0; i < n && bianchi1.passed; ++i)
    for (std::size_t j = i + 1; j < n && bianchi1.passed; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const VectorField s = r(i, j, k) + r(j, k, i) + r(k, i, j);
        if (!s.is_zero()) {
          bianchi1.passed = false;
          bianchi1.detail = describe("cyclic sum at (" + e(i) + "," + e(j) + "," + e(k) + ")", s);
          break;
        }
      }

  Check bianchi2{"second Bianchi identity", true, ""};
  for (std::size_t w = 0; w < n && bianchi2.passed; ++w)
    for (std::size_t i = w + 1; i < n && bianchi2.passed; ++i)
      for (std::size_t j = i + 1; j < n && bianchi2.passed; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const VectorField s = t.nabla_R(w, i, j, k) + t.nabla_R(i, j, w, k) + t.nabla_R(j, w, i, k);
          if (!s.is_zero()) {
            bianchi2.passed = false;
            bianchi2.detail = describe("cyclic sum at (" + e(w) + "," + e(i) + "," + e(j) + ") on " + e(k), s);
            break;
          }
        }
  return {anti, skew, bianchi1, bianchi2};
}

StructureDerivatives nabla_structure_tensors(const FrameManifold& m, const ConnectionTable& conn,
                                             const ContactStructure& c) {
  const std::size_t n = m.dim();
  StructureDerivatives d;
  d.nabla_xi.resize(n);
  d.nabla_eta.assign(n, std::vector<Expr>(n));
  d.nabla_phi.assign(n, std::vector<VectorField>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.nabla_xi[i] = covariant_derivative_vf(m, conn, m.basis(i), c.xi());
    for (std::size_t j = 0; j < n; ++j) {
      d.nabla_eta[i][j] = m.directional_derivative(i, c.eta()[j]) - c.eta_of(conn.nabla(i, j));
      d.nabla_phi[i][j] = nabla_tensor(m, conn, c.phi(), i, j);
    }
  }
  return d;
}

std::vector<Check> check_structure_identities(const CurvatureTables& t, const ContactStructure& c,
                                              const ExprMatrix& h) {
  const FrameManifold& m = t.manifold();
  const std::size_t n = m.dim();
  const StructureDerivatives d = nabla_structure_tensors(m, t.connection(), c);

  Check xi{"nabla_X xi = -phi X - phi h X", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField ei = m.basis(i);
    const VectorField diff =
        d.nabla_xi[i] + c.apply_phi(ei) + c.apply_phi(ContactStructure::apply(h, ei));
    if (!diff.is_zero()) {
      xi.passed = false;
      xi.detail = describe("difference at X = " + e(i), diff);
      break;
    }
  }

  Check eta{"(nabla_X eta)(Y) = g(X + hX, phi Y)", true, ""};
  for (std::size_t i = 0; i < n && eta.passed; ++i) {
    const VectorField x = m.basis(i) + ContactStructure::apply(h, m.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Expr diff = d.nabla_eta[i][j] - m.inner(x, c.phi_image(j));
      if (!diff.is_zero()) {
        eta.passed = false;
        eta.detail = "difference at (" + e(i) + "," + e(j) + ") = " + diff.to_string();
        break;
      }
    }
  }

  Check phi{"nabla_xi phi = 0", true, ""};
  for (std::size_t j = 0; j < n; ++j) {
    const VectorField v = nabla_tensor(m, t.connection(), c.phi(), c.xi(), m.basis(j));
    if (!v.is_zero()) {
      phi.passed = false;
      phi.detail = describe("(nabla_xi phi)" + e(j), v);
      break;
    }
  }
  return {xi, eta, phi};
}

Check check_nabla_phi_kmu(const CurvatureTables& t, const ContactStructure& c, const ExprMatrix& h) {
  const FrameManifold& m = t.manifold();
  const std::size_t n = m.dim();
  Check out{"(nabla_X phi)Y = g(X + hX, Y)xi - eta(Y)(X + hX)", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField x = m.basis(i) + ContactStructure::apply(h, m.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField expected = m.inner(x, m.basis(j)) * c.xi() - c.eta()[j] * x;
      const VectorField diff = nabla_tensor(m, t.connection(), c.phi(), i, j) - expected;
      if (!diff.is_zero()) {
        out.passed = false;
        out.detail = describe("difference at (" + e(i) + "," + e(j) + ")", diff);
        return out;
      }
    }
  }
  return out;
}

std::vector<Check> check_optional_contact_identities(const CurvatureTables& t,
                                                     const ContactStructure& c,
                                                     const ExprMatrix& h) {
  const FrameManifold& m = t.manifold();
  const ConnectionTable& conn = t.connection();
  const RiemannTensor& r = t.riemann();
  const std::size_t n = m.dim();
  const ExprMatrix phi_h = c.phi() * h;
  const VectorField& xi = c.xi();

  Check first{"g(R(xi,X)Y,Z) = g((nabla_X phi)Y,Z) + g((nabla_Z phi h)Y - (nabla_Y phi h)Z, X)",
              true, ""};
  for (std::size_t a = 0; a < n && first.passed; ++a)
    for (std::size_t b = 0; b < n && first.passed; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        const VectorField x = m.basis(a), y = m.basis(b), z = m.basis(cc);
        const Expr lhs = m.inner(r.apply(xi, x, y), z);
        const VectorField inner =
            nabla_tensor(m, conn, phi_h, cc, b) - nabla_tensor(m, conn, phi_h, b, cc);
        const Expr rhs = m.inner(nabla_tensor(m, conn, c.phi(), a, b), z) + m.inner(inner, x);
        const Expr diff = lhs - rhs;
        if (!diff.is_zero()) {
          first.passed = false;
          first.detail = "difference at (X,Y,Z) = (" + e(a) + "," + e(b) + "," + e(cc) +
                         ") is " + diff.to_string();
          break;
        }
      }

  Check second{"2(nabla_{hX} phi)Y = -R(xi,X)Y - phi R(xi,X)phi Y + phi R(xi,phi X)Y - "
               "R(xi,phi X)phi Y + 2g(X+hX,Y)xi - 2eta(Y)(X+hX)",
               true, ""};
  for (std::size_t a = 0; a < n && second.passed; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const VectorField x = m.basis(a), y = m.basis(b);
      const VectorField hx = ContactStructure::apply(h, x);
      const VectorField phx = c.apply_phi(x), phy = c.apply_phi(y);
      const VectorField x_hx = x + hx;
      const VectorField lhs = Expr(2) * nabla_tensor(m, conn, c.phi(), hx, y);
      const VectorField rhs = -r.apply(xi, x, y) - c.apply_phi(r.apply(xi, x, phy)) +
                              c.apply_phi(r.apply(xi, phx, y)) - r.apply(xi, phx, phy) +
                              (Expr(2) * m.inner(x_hx, y)) * xi - (Expr(2) * c.eta()[b]) * x_hx;
      const VectorField diff = lhs - rhs;
      if (!diff.is_zero()) {
        second.passed = false;
        second.detail = describe("difference at (X,Y) = (" + e(a) + "," + e(b) + ")", diff);
        break;
      }
    }
  return {first, second};
}

}  // namespace ctensor
