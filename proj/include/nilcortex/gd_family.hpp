#pragma once

// The family g_d (d >= 2): a 4d-dimensional two-step nilpotent Lie algebra
// with ordered basis (Z_1..Z_d, Y_1..Y_{2d}, X_1..X_d) and nontrivial
// brackets
//
//   [X_i, Y_{2i-1}] = Z_1              i = 1..d
//   [X_k, Y_{2k}]   = Z_{k+1}          k = 1..d-1
//   [X_d, Y_{2d}]   = Z_2 + ... + Z_d
//
// Dual coordinates follow the same order: l = (z_1..z_d, y_1..y_{2d}, x_1..x_d).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilcortex/coadjoint.hpp"
#include "nilcortex/lie_algebra.hpp"
#include "nilcortex/polynomial.hpp"

namespace nilcortex {

/// 0-based positions of the g_d basis vectors; arguments are 1-based
/// subscripts as in Z_i, Y_j, X_k.
struct GdLayout {
  std::size_t d;

  std::size_t dim() const { return 4 * d; }
  std::size_t z(std::size_t i) const { return i - 1; }
  std::size_t y(std::size_t j) const { return d + j - 1; }
  std::size_t x(std::size_t k) const { return 3 * d + k - 1; }
};

struct GdDescriptor {
  std::size_t d;
  LieAlgebra algebra;

  GdLayout layout() const { return {d}; }
};

/// Throws ArgumentError for d < 2.
GdDescriptor make_gd(std::size_t d);

/// Basis labels "Z1".."Zd", "Y1".."Y2d", "X1".."Xd".
std::vector<std::string> gd_basis_labels(std::size_t d);
/// Dual coordinate names "z1".., "y1"..,"x1".. used when printing polynomials.
std::vector<std::string> gd_coordinate_names(std::size_t d);

/// Q_d = y_{2d-1} * sum_{i<d} y_{2i} prod_{j<d, j!=i} y_{2j-1}
///       - y_{2d} * prod_{j<d} y_{2j-1}
/// as a polynomial in the 4d dual coordinates. Homogeneous of degree d
/// with d terms.
SparsePoly cortex_poly(std::size_t d);

/// z_1..z_d, then z_1 y_{2k} - z_{k+1} y_{2k-1} (k < d), then
/// z_1 y_{2d} - (z_2 + ... + z_d) y_{2d-1}.
std::vector<SparsePoly> invariant_generators(std::size_t d);

/// Cross-section map of the generic layer onto
/// span{Z_i*, Y_{2k}*}: keeps z, replaces y_{2k} by
/// y_{2k} - (z_{k+1}/z_1) y_{2k-1} (k < d) and y_{2d} by
/// y_{2d} - ((z_2 + ... + z_d)/z_1) y_{2d-1}, zeroes the rest.
/// Throws OutOfLayerError when z_1 = 0.
Covector cross_section_map(std::size_t d, std::span<const Rational> ell);

/// {d+1, d+3, ..., 3d-1} u {3d+1, ..., 4d}.
JumpIndexSet expected_jump_set(std::size_t d);

}  // namespace nilcortex
