#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace csg {

using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Exact integer determinant (fraction-free elimination).
std::int64_t det_integer(MatZ m);

inline bool is_unimodular(const MatZ& m) {
  if (m.rows() != m.cols()) return false;
  std::int64_t d = det_integer(m);
  return d == 1 || d == -1;
}

// Standard symplectic form on Z^{2g} in interleaved order A1 B1 A2 B2 ...,
// with A_i . B_i = 1.
MatZ standard_symplectic_form(int genus);

}  // namespace csg
