#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "contact_tensor/checks.hpp"
#include "contact_tensor/contact.hpp"
#include "contact_tensor/frame.hpp"
#include "contact_tensor/parallel.hpp"

namespace ctensor {

/// Gamma^k_{ij} with nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k.
class ConnectionTable {
 public:
  ConnectionTable() = default;
  explicit ConnectionTable(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Expr& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const Expr& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  /// nabla_{e_i} e_j.
  VectorField nabla(std::size_t i, std::size_t j) const;

  friend bool operator==(const ConnectionTable&, const ConnectionTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Expr> data_;
};

/// R^l_{ijk} with R(e_i, e_j)e_k = sum_l R^l_{ijk} e_l and
/// R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  VectorField& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
  const VectorField& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  /// R(X, Y)Z by multilinearity.
  VectorField apply(const VectorField& x, const VectorField& y, const VectorField& z) const;
  bool is_zero() const;

  friend bool operator==(const RiemannTensor&, const RiemannTensor&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<VectorField> data_;
};

struct RicciData {
  ExprMatrix ricci;     ///< S_{ij}
  ExprMatrix operator_; ///< column i = Q e_i, so entry (j, i) is Q^j_i
  Expr scalar;
};

ConnectionTable koszul(const FrameManifold& m, ExecPolicy policy = ExecPolicy::serial);

/// (nabla_X Y)^k = sum_i X^i e_i(Y^k) + sum_{i,j} X^i Y^j Gamma^k_{ij}.
VectorField covariant_derivative_vf(const FrameManifold& m, const ConnectionTable& conn,
                                    const VectorField& x, const VectorField& y);

RiemannTensor riemann(const FrameManifold& m, const ConnectionTable& conn,
                      ExecPolicy policy = ExecPolicy::serial);

/// S_{jk} = sum_i R^i_{ijk}, Q = g^{-1} S, r = tr Q.
RicciData ricci_scalar(const FrameManifold& m, const RiemannTensor& r);

/// (nabla_{e_w} R)(e_i, e_j)e_k from connection and curvature directly.
VectorField nabla_R_component(const FrameManifold& m, const ConnectionTable& conn,
                              const RiemannTensor& r, std::size_t w, std::size_t i, std::size_t j,
                              std::size_t k);

/// Connection, curvature and Ricci data of a frame manifold, with lazily
/// memoized nabla R. Copies share the memo table; all accessors are safe to
/// call concurrently.
class CurvatureTables {
 public:
  explicit CurvatureTables(FrameManifold m, ExecPolicy policy = ExecPolicy::serial);

  const FrameManifold& manifold() const { return manifold_; }
  std::size_t dim() const { return manifold_.dim(); }
  const ConnectionTable& connection() const { return connection_; }
  const RiemannTensor& riemann() const { return riemann_; }
  const RicciData& ricci() const { return ricci_; }

  /// (nabla_{e_w} R)(e_i, e_j)e_k, computed on first request.
  VectorField nabla_R(std::size_t w, std::size_t i, std::size_t j, std::size_t k) const;
  /// Fills every nabla R component.
  void compute_all_nabla_R(ExecPolicy policy) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::vector<std::optional<VectorField>> slots;
  };
  std::size_t slot(std::size_t w, std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    return ((w * n + i) * n + j) * n + k;
  }

  FrameManifold manifold_;
  ConnectionTable connection_;
  RiemannTensor riemann_;
  RicciData ricci_;
  std::shared_ptr<Memo> memo_;
};

/// Torsion-freeness and metric compatibility of the connection.
std::vector<Check> check_connection(const FrameManifold& m, const ConnectionTable& conn);

/// Antisymmetry in the first pair, skew-adjointness of R(e_i, e_j), first and
/// second Bianchi identities.
std::vector<Check> check_curvature_symmetries(const CurvatureTables& t);

struct StructureDerivatives {
  std::vector<VectorField> nabla_xi;               ///< [i] = nabla_{e_i} xi
  std::vector<std::vector<Expr>> nabla_eta;        ///< [i][j] = (nabla_{e_i} eta)(e_j)
  std::vector<std::vector<VectorField>> nabla_phi; ///< [i][j] = (nabla_{e_i} phi)(e_j)
};

StructureDerivatives nabla_structure_tensors(const FrameManifold& m, const ConnectionTable& conn,
                                             const ContactStructure& c);

/// Contact metric identities nabla_X xi = -phi X - phi h X,
/// (nabla_X eta)(Y) = g(X + hX, phi Y) and nabla_xi phi = 0.
std::vector<Check> check_structure_identities(const CurvatureTables& t, const ContactStructure& c,
                                              const ExprMatrix& h);

/// (nabla_X phi)Y = g(X + hX, Y)xi - eta(Y)(X + hX), valid on (kappa, mu)-spaces.
Check check_nabla_phi_kmu(const CurvatureTables& t, const ContactStructure& c, const ExprMatrix& h);

/// Optional contact metric identities:
///   g(R(xi,X)Y, Z) = g((nabla_X phi)Y, Z) + g((nabla_Z phi h)Y - (nabla_Y phi h)Z, X)
///   2(nabla_{hX} phi)Y = -R(xi,X)Y - phi R(xi,X)phi Y + phi R(xi,phi X)Y
///                        - R(xi,phi X)phi Y + 2g(X+hX,Y)xi - 2eta(Y)(X+hX)
std::vector<Check> check_optional_contact_identities(const CurvatureTables& t,
                                                     const ContactStructure& c,
                                                     const ExprMatrix& h);

}  // namespace ctensor
