#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "contact_tensor/contact.hpp"

namespace ctensor {

struct CatalogEntry {
  std::string id;
  std::string provenance;
  /// Entries tagged invalid-fixture are not contact metric by design.
  bool invalid_fixture = false;
  ContactStructure structure;

  const FrameManifold& manifold() const { return structure.base(); }
};

/// Chart frame on {x != 0} in R^3: e1 = (2/x)d/dy, e2 = 2d/dx - (4z/x)d/dy + xy d/dz,
/// e3 = d/dz, orthonormal, phi e1 = e2, phi e2 = -e1, phi e3 = 0, xi = e3.
CatalogEntry build_example_41();

/// Abstract frame [e2,e3] = 2e1, [e3,e1] = c2 e2, [e1,e2] = c3 e3 with
/// c2 = 1 - lambda - mu/2, c3 = 1 + lambda - mu/2; orthonormal, xi = e1,
/// phi e1 = 0, phi e2 = e3, phi e3 = -e2. `symbols` must declare every
/// parameter occurring in lambda and mu. Throws Error when lambda is
/// identically zero or a nonpositive constant.
CatalogEntry build_kmu_frame(const Expr& lambda, const Expr& mu, SymbolTable symbols);

/// build_kmu_frame with free parameters "lambda" and "mu".
CatalogEntry build_kmu_symbolic();

/// Cyclic frame [e_i, e_j] = 2e_k (c2 = c3 = 2): the unit 3-sphere.
CatalogEntry build_sasakian_sphere();

/// Abelian orthonormal frame with xi = e1, phi e_{2k} = e_{2k+1},
/// phi e_{2k+1} = -e_{2k}. Tagged invalid-fixture. Throws Error for even or
/// small dim.
CatalogEntry build_flat_euclidean(std::size_t dim);

std::vector<std::string> catalog_ids();

/// Throws Error listing the available ids when `id` is unknown.
CatalogEntry build_entry(std::string_view id);

}  // namespace ctensor
