#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contact_tensor/contact.hpp"
#include "contact_tensor/curvature.hpp"

namespace ctensor {

enum class Scope { global, local };
std::string_view to_string(Scope scope);

/// Frame indices admitted by a scope: all of them, or those with eta(e_i) = 0.
std::vector<std::size_t> scope_indices(const ContactStructure& c, Scope scope);

/// A component equation lhs = rhs that failed. `index` holds 0-based frame
/// indices; its meaning is fixed by the producing classifier.
struct ComponentWitness {
  std::vector<std::size_t> index;
  Expr lhs;
  Expr rhs;
};

struct SasakianVerdict {
  bool sasakian = false;
  /// (i, j, l): component l of R(e_i, e_j)xi - eta(e_j)e_i + eta(e_i)e_j.
  std::optional<ComponentWitness> witness;
};

/// R(e_i, e_j)xi = eta(e_j)e_i - eta(e_i)e_j for all i, j.
SasakianVerdict is_sasakian(const CurvatureTables& t, const ContactStructure& c);

enum class KappaMuStatus { consistent, inconsistent, underdetermined };
std::string_view to_string(KappaMuStatus s);

struct KappaMuVerdict {
  KappaMuStatus status = KappaMuStatus::underdetermined;
  /// Solution; for underdetermined systems the particular solution with the
  /// free unknown set to 0.
  std::optional<Expr> kappa;
  std::optional<Expr> mu;
  /// (i, j, l): component l of R(e_i, e_j)xi; lhs is the curvature side,
  /// rhs the value forced by the equations solved so far.
  std::optional<ComponentWitness> witness;
  bool constant = false;
  /// kappa <= 1 at every sampled parameter binding; empty when not checked.
  std::optional<bool> kappa_at_most_one;
};

/// Solves R(e_i,e_j)xi = kappa(eta_j e_i - eta_i e_j) + mu(eta_j h e_i - eta_i h e_j)
/// for kappa, mu by exact elimination, equations taken in (i, j, l) order.
KappaMuVerdict solve_kappa_mu(const CurvatureTables& t, const ContactStructure& c,
                              const ExprMatrix& h);

bool is_flat(const CurvatureTables& t);

/// c with R(X,Y)Z = c(g(Y,Z)X - g(X,Z)Y) if that holds componentwise.
std::optional<Expr> constant_curvature(const CurvatureTables& t);

struct SymmetryVerdict {
  bool holds = true;
  /// (w, i, j, k, l), lexicographically first nonzero component; lhs is its value.
  std::optional<ComponentWitness> witness;
};

/// nabla R = 0.
SymmetryVerdict is_locally_symmetric(const CurvatureTables& t,
                                     ExecPolicy policy = ExecPolicy::serial);

/// phi^2((nabla_{e_w} R)(e_i, e_j)e_k) = 0 with w, i, j, k in scope.
SymmetryVerdict phi_symmetry(const CurvatureTables& t, const ContactStructure& c, Scope scope,
                             ExecPolicy policy = ExecPolicy::serial);

enum class RecurrenceStatus { recurrent, not_recurrent, trivially_recurrent };
std::string_view to_string(RecurrenceStatus s);

struct RecurrenceVerdict {
  RecurrenceStatus status = RecurrenceStatus::trivially_recurrent;
  Scope scope = Scope::global;
  /// Solved form; components outside the scope are 0. Equals eta when
  /// trivially recurrent.
  std::optional<OneForm> a;
  /// (w, i, j, k, l) with lhs = component l of phi^2((nabla_w R)(e_i,e_j)e_k)
  /// and rhs = A(e_w) R^l_{ijk} under the value of A(e_w) solved so far.
  std::optional<ComponentWitness> obstruction;
  /// Set when the only solution is A = 0.
  bool only_zero = false;
  bool a_parameter_only = true;
};

/// phi^2((nabla_{e_w} R)(e_i, e_j)e_k) = A(e_w) R(e_i, e_j)e_k solved per w.
RecurrenceVerdict solve_phi_recurrence(const CurvatureTables& t, const ContactStructure& c,
                                       Scope scope, ExecPolicy policy = ExecPolicy::serial);

/// R = g(Y,Z)QX - g(X,Z)QY + S(Y,Z)X - S(X,Z)Y - (r/2)(g(Y,Z)X - g(X,Z)Y).
/// Throws DimensionError unless dim = 3.
bool check_3d_decomposition(const FrameManifold& m, const RiemannTensor& r, const RicciData& ricci);

struct ClassificationReport {
  bool contact_valid = false;
  SasakianVerdict sasakian;
  KappaMuVerdict kappa_mu;
  bool flat = false;
  std::optional<Expr> constant_curvature;
  SymmetryVerdict locally_symmetric;
  SymmetryVerdict phi_symmetric;
  SymmetryVerdict locally_phi_symmetric;
  RecurrenceVerdict phi_recurrent;
  RecurrenceVerdict locally_phi_recurrent;
  std::vector<std::string> diagnostics;

  /// flat => locally symmetric => phi-symmetric => locally phi-symmetric.
  bool implication_chain_holds() const;
};

ClassificationReport classify(const CurvatureTables& t, const ContactStructure& c,
                              const ExprMatrix& h, bool contact_valid,
                              ExecPolicy policy = ExecPolicy::serial);

}  // namespace ctensor
