#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "contact_tensor/frame.hpp"

namespace ctensor {

/// One failed axiom. Frame indices are 0-based; `j` is empty for axioms
/// indexed by a single frame vector.
struct AxiomViolation {
  std::string axiom;
  std::optional<std::size_t> i;
  std::optional<std::size_t> j;
  Expr residual;

  std::string to_string() const;
};

struct ValidationVerdict {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// (phi, xi, eta, g) on a frame manifold. eta is the metric dual of xi.
class ContactStructure {
 public:
  /// `phi` column i holds the frame components of phi(e_i).
  /// Throws DimensionError on shape mismatch.
  ContactStructure(FrameManifold base, ExprMatrix phi, VectorField xi);
  /// Builds phi from the list of images phi(e_1), ..., phi(e_n).
  static ContactStructure from_images(FrameManifold base, const std::vector<VectorField>& images,
                                      VectorField xi);

  const FrameManifold& base() const { return base_; }
  const ExprMatrix& phi() const { return phi_; }
  const VectorField& xi() const { return xi_; }
  const OneForm& eta() const { return eta_; }
  std::size_t dim() const { return base_.dim(); }

  VectorField apply_phi(const VectorField& x) const { return apply(phi_, x); }
  Expr eta_of(const VectorField& x) const;
  /// phi(e_i) as a vector field.
  VectorField phi_image(std::size_t i) const;

  static VectorField apply(const ExprMatrix& m, const VectorField& x);

 private:
  FrameManifold base_;
  ExprMatrix phi_;
  VectorField xi_;
  OneForm eta_;
};

/// Applies a simultaneous substitution to every input of the structure (frame
/// or structure functions, metric, phi, xi) and rebuilds it. Throws PoleError
/// and the FrameManifold construction errors.
ContactStructure substitute(const ContactStructure& c, const std::map<Var, Expr>& replacements);

/// Collects every failure of eta(xi)=1, phi^2 = -Id + eta(x)xi, phi xi = 0,
/// eta o phi = 0 and g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y) on frame pairs.
ValidationVerdict validate_almost_contact(const ContactStructure& c);

/// d eta(e_i, e_j) = 1/2 (e_i(eta_j) - e_j(eta_i) - eta([e_i, e_j])).
Expr d_eta(const ContactStructure& c, std::size_t i, std::size_t j);

/// Failures of d eta(e_i, e_j) = g(e_i, phi e_j) for i < j.
ValidationVerdict check_contact_metric(const ContactStructure& c);

/// h X = 1/2 ([xi, phi X] - phi [xi, X]) in the frame, column i = h(e_i).
/// No invariant checks; see check_h and compute_h.
ExprMatrix lie_h(const ContactStructure& c);

/// Failures of h xi = 0, h phi = -phi h, tr h = 0 and self-adjointness.
ValidationVerdict check_h(const ContactStructure& c, const ExprMatrix& h);

/// lie_h followed by check_h; throws Error naming the first failed invariant.
ExprMatrix compute_h(const ContactStructure& c);

struct HEigenstructure {
  /// Expr with positive leading numerator coefficient, or 0 when h = 0.
  Expr lambda;
  std::vector<std::size_t> plus;   ///< D(lambda)
  std::vector<std::size_t> minus;  ///< D(-lambda)
  std::vector<std::size_t> zero;   ///< D(0)
};

/// Partitions frame indices by eigenvalue of a frame-diagonal h. Throws
/// Unsupported when h is not diagonal or has more than one nonzero
/// eigenvalue pair.
HEigenstructure h_eigenstructure(const ExprMatrix& h);

}  // namespace ctensor
