#pragma once

// Numeric Levi-Civita data for a frame with constant structure functions and
// a constant metric, evaluated entirely in exact rationals. Used to check the
// symbolic tables at sampled parameter values.

#include <vector>

#include "tree_eval.hpp"

namespace oracle {

using Vec = std::vector<Q>;

struct FrameData {
  std::size_t n = 0;
  std::vector<std::vector<Vec>> c;  // c[i][j][k] = C^k_ij
  std::vector<Vec> g;
};

struct Curvature {
  std::vector<std::vector<Vec>> gamma;               // gamma[i][j] = nabla_{e_i} e_j
  std::vector<std::vector<std::vector<Vec>>> r;      // r[i][j][k] = R(e_i,e_j)e_k
  std::vector<Vec> ricci;                            // S(e_i,e_j)
  Q scalar;
};

std::vector<Vec> invert(std::vector<Vec> m);
Curvature curvature(const FrameData& f);

}  // namespace oracle
