#include "contact_tensor/classify.hpp"

#include <random>

#include "contact_tensor/errors.hpp"

namespace ctensor {

std::string_view to_string(Scope scope) { return scope == Scope::global ? "global" : "local"; }

std::string_view to_string(KappaMuStatus s) {
  switch (s) {
    case KappaMuStatus::consistent: return "consistent";
    case KappaMuStatus::inconsistent: return "inconsistent";
    case KappaMuStatus::underdetermined: return "underdetermined";
  }
  return "?";
}

std::string_view to_string(RecurrenceStatus s) {
  switch (s) {
    case RecurrenceStatus::recurrent: return "recurrent";
    case RecurrenceStatus::not_recurrent: return "not_recurrent";
    case RecurrenceStatus::trivially_recurrent: return "trivially_recurrent";
  }
  return "?";
}

std::vector<std::size_t> scope_indices(const ContactStructure& c, Scope scope) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (scope == Scope::global || c.eta()[i].is_zero()) out.push_back(i);
  return out;
}

SasakianVerdict is_sasakian(const CurvatureTables& t, const ContactStructure& c) {
  const std::size_t n = t.dim();
  const FrameManifold& m = t.manifold();
  SasakianVerdict v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField lhs = t.riemann().apply(m.basis(i), m.basis(j), c.xi());
      const VectorField rhs = c.eta()[j] * m.basis(i) - c.eta()[i] * m.basis(j);
      for (std::size_t l = 0; l < n; ++l)
        if (!(lhs[l] - rhs[l]).is_zero()) {
          v.witness = ComponentWitness{{i, j, l}, lhs[l], rhs[l]};
          return v;
        }
    }
  v.sasakian = true;
  return v;
}

namespace {

struct Row {
  Expr a, b, c;  // a kappa + b mu = c
};

Row minus_scaled(const Row& r, const Expr& s, const Row& p) {
  return {r.a - s * p.a, r.b - s * p.b, r.c - s * p.c};
}

std::optional<bool> sample_at_most_one(const Expr& kappa) {
  const std::vector<Var> vars = kappa.variables();
  if (vars.empty()) return *kappa.constant_value() <= 1;
  std::mt19937_64 rng(0x6b617070);
  std::uniform_int_distribution<long> num(-16, 16);
  std::uniform_int_distribution<long> den(1, 8);
  int checked = 0;
  for (int attempt = 0; attempt < 200 && checked < 20; ++attempt) {
    Bindings b;
    for (Var v : vars) b[v] = Rational(num(rng), den(rng));
    try {
      if (eval(kappa, b) > 1) return false;
      ++checked;
    } catch (const PoleError&) {
    }
  }
  return true;
}

}  // namespace

KappaMuVerdict solve_kappa_mu(const CurvatureTables& t, const ContactStructure& c,
                              const ExprMatrix& h) {
  const std::size_t n = t.dim();
  const FrameManifold& m = t.manifold();
  std::optional<Row> pk;  // reduced row with a = 1
  std::optional<Row> pm;  // reduced row with a = 0, b = 1
  KappaMuVerdict v;
  for (std::size_t i = 0; i < n; ++i) {
    const VectorField hi = ContactStructure::apply(h, m.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const VectorField hj = ContactStructure::apply(h, m.basis(j));
      const VectorField r = t.riemann().apply(m.basis(i), m.basis(j), c.xi());
      const Expr& ei = c.eta()[i];
      const Expr& ej = c.eta()[j];
      for (std::size_t l = 0; l < n; ++l) {
        Row row{(l == i ? ej : Expr()) - (l == j ? ei : Expr()), ej * hi[l] - ei * hj[l], r[l]};
        if (pk) row = minus_scaled(row, row.a, *pk);
        if (pm) row = minus_scaled(row, row.b, *pm);
        if (!row.a.is_zero()) {
          pk = Row{Expr(1), row.b / row.a, row.c / row.a};
        } else if (!row.b.is_zero()) {
          pm = Row{Expr(), Expr(1), row.c / row.b};
          if (pk) *pk = minus_scaled(*pk, pk->b, *pm);
        } else if (!row.c.is_zero()) {
          v.status = KappaMuStatus::inconsistent;
          v.witness = ComponentWitness{{i, j, l}, r[l], r[l] - row.c};
          return v;
        }
      }
    }
  }
  const Expr mu = pm ? pm->c : Expr();
  const Expr kappa = pk ? pk->c - pk->b * mu : Expr();
  v.status = (pk && pm) ? KappaMuStatus::consistent : KappaMuStatus::underdetermined;
  v.kappa = kappa;
  v.mu = mu;
  v.constant = kappa.is_parameter_only(m.symbols()) && mu.is_parameter_only(m.symbols());
  if (v.constant && v.status == KappaMuStatus::consistent) v.kappa_at_most_one = sample_at_most_one(kappa);
  return v;
}

bool is_flat(const CurvatureTables& t) { return t.riemann().is_zero(); }

std::optional<Expr> constant_curvature(const CurvatureTables& t) {
  const std::size_t n = t.dim();
  const ExprMatrix& g = t.manifold().metric();
  auto ansatz = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return (l == i ? g(j, k) : Expr()) - (l == j ? g(i, k) : Expr());
  };
  // c is fixed by the first component where the ansatz is nonzero, then every
  // component is checked against it.
  std::optional<Expr> c;
  for (std::size_t s = 0; s < n * n * n * n && !c; ++s) {
    const std::size_t i = s / (n * n * n), j = (s / (n * n)) % n, k = (s / n) % n, l = s % n;
    const Expr a = ansatz(i, j, k, l);
    if (!a.is_zero()) c = t.riemann()(i, j, k)[l] / a;
  }
  if (!c) c = Expr();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!(t.riemann()(i, j, k)[l] - *c * ansatz(i, j, k, l)).is_zero()) return std::nullopt;
  return c;
}

SymmetryVerdict is_locally_symmetric(const CurvatureTables& t, ExecPolicy policy) {
  const std::size_t n = t.dim();
  t.compute_all_nabla_R(policy);
  SymmetryVerdict v;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const VectorField d = t.nabla_R(w, i, j, k);
          for (std::size_t l = 0; l < n; ++l)
            if (!d[l].is_zero()) {
              v.holds = false;
              v.witness = ComponentWitness{{w, i, j, k, l}, d[l], Expr()};
              return v;
            }
        }
  return v;
}

namespace {

VectorField phi_squared(const ContactStructure& c, const VectorField& v) {
  return c.apply_phi(c.apply_phi(v));
}

}  // namespace

SymmetryVerdict phi_symmetry(const CurvatureTables& t, const ContactStructure& c, Scope scope,
                             ExecPolicy policy) {
  const std::size_t n = t.dim();
  const std::vector<std::size_t> idx = scope_indices(c, scope);
  t.compute_all_nabla_R(policy);
  SymmetryVerdict v;
  for (std::size_t w : idx)
    for (std::size_t i : idx)
      for (std::size_t j : idx)
        for (std::size_t k : idx) {
          const VectorField d = phi_squared(c, t.nabla_R(w, i, j, k));
          for (std::size_t l = 0; l < n; ++l)
            if (!d[l].is_zero()) {
              v.holds = false;
              v.witness = ComponentWitness{{w, i, j, k, l}, d[l], Expr()};
              return v;
            }
        }
  return v;
}

RecurrenceVerdict solve_phi_recurrence(const CurvatureTables& t, const ContactStructure& c,
                                       Scope scope, ExecPolicy policy) {
  const std::size_t n = t.dim();
  const std::vector<std::size_t> idx = scope_indices(c, scope);
  t.compute_all_nabla_R(policy);
  RecurrenceVerdict v;
  v.scope = scope;
  OneForm a(n);
  bool constrained = false;
  for (std::size_t w : idx) {
    std::optional<Expr> aw;
    for (std::size_t i : idx)
      for (std::size_t j : idx)
        for (std::size_t k : idx) {
          if (aw) break;
          const VectorField lhs = phi_squared(c, t.nabla_R(w, i, j, k));
          const VectorField& r = t.riemann()(i, j, k);
          for (std::size_t l = 0; l < n && !aw; ++l)
            if (!r[l].is_zero()) aw = lhs[l] / r[l];
        }
    const Expr value = aw.value_or(Expr());
    for (std::size_t i : idx)
      for (std::size_t j : idx)
        for (std::size_t k : idx) {
          const VectorField lhs = phi_squared(c, t.nabla_R(w, i, j, k));
          const VectorField& r = t.riemann()(i, j, k);
          for (std::size_t l = 0; l < n; ++l) {
            const Expr rhs = value * r[l];
            if (!(lhs[l] - rhs).is_zero()) {
              v.status = RecurrenceStatus::not_recurrent;
              v.obstruction = ComponentWitness{{w, i, j, k, l}, lhs[l], rhs};
              return v;
            }
          }
        }
    if (aw) {
      constrained = true;
      a[w] = *aw;
    }
  }
  if (!constrained) {
    v.status = RecurrenceStatus::trivially_recurrent;
    v.a = c.eta();
    return v;
  }
  for (std::size_t w : idx)
    if (!a[w].is_parameter_only(t.manifold().symbols())) v.a_parameter_only = false;
  bool nonzero = false;
  for (std::size_t w : idx) nonzero = nonzero || !a[w].is_zero();
  if (!nonzero) {
    v.status = RecurrenceStatus::not_recurrent;
    v.only_zero = true;
    v.a = a;
    return v;
  }
  v.status = RecurrenceStatus::recurrent;
  v.a = a;
  return v;
}

bool check_3d_decomposition(const FrameManifold& m, const RiemannTensor& r, const RicciData& ricci) {
  if (m.dim() != 3) throw DimensionError("3-D decomposition requires dimension 3");
  const std::size_t n = 3;
  const ExprMatrix& g = m.metric();
  const ExprMatrix& s = ricci.ricci;
  const Expr half_r = Expr::rational(1, 2) * ricci.scalar;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const VectorField ei = m.basis(i), ej = m.basis(j);
        const VectorField qi(ricci.operator_.column(i)), qj(ricci.operator_.column(j));
        const VectorField expected = g(j, k) * qi - g(i, k) * qj + s(j, k) * ei - s(i, k) * ej -
                                     half_r * (g(j, k) * ei - g(i, k) * ej);
        if (!(r(i, j, k) - expected).is_zero()) return false;
      }
  return true;
}

bool ClassificationReport::implication_chain_holds() const {
  if (flat && !locally_symmetric.holds) return false;
  if (locally_symmetric.holds && !phi_symmetric.holds) return false;
  if (phi_symmetric.holds && !locally_phi_symmetric.holds) return false;
  return true;
}

ClassificationReport classify(const CurvatureTables& t, const ContactStructure& c,
                              const ExprMatrix& h, bool contact_valid, ExecPolicy policy) {
  ClassificationReport rep;
  rep.contact_valid = contact_valid;
  t.compute_all_nabla_R(policy);
  rep.sasakian = is_sasakian(t, c);
  rep.kappa_mu = solve_kappa_mu(t, c, h);
  rep.flat = is_flat(t);
  rep.constant_curvature = constant_curvature(t);
  rep.locally_symmetric = is_locally_symmetric(t, policy);
  rep.phi_symmetric = phi_symmetry(t, c, Scope::global, policy);
  rep.locally_phi_symmetric = phi_symmetry(t, c, Scope::local, policy);
  rep.phi_recurrent = solve_phi_recurrence(t, c, Scope::global, policy);
  rep.locally_phi_recurrent = solve_phi_recurrence(t, c, Scope::local, policy);

  if (!contact_valid) rep.diagnostics.emplace_back("structure is not contact metric; verdicts are formal");
  const KappaMuVerdict& km = rep.kappa_mu;
  if (km.status != KappaMuStatus::inconsistent && !km.constant)
    rep.diagnostics.emplace_back("nullity with non-constant coefficients");
  if (km.kappa_at_most_one && !*km.kappa_at_most_one)
    rep.diagnostics.emplace_back("kappa exceeds 1 at a sampled parameter binding");
  for (const RecurrenceVerdict* r : {&rep.phi_recurrent, &rep.locally_phi_recurrent})
    if (r->status == RecurrenceStatus::recurrent && !r->a_parameter_only)
      rep.diagnostics.emplace_back(std::string(to_string(r->scope)) +
                                   " recurrence form A depends on coordinates");
  if (scope_indices(c, Scope::local).empty())
    rep.diagnostics.emplace_back("no frame vector is orthogonal to xi; local tests are vacuous");
  return rep;
}

}  // namespace ctensor
