#pragma once

// Coadjoint action of a Lie algebra on its dual.
//
// Covectors are coordinate vectors in the dual basis U_1*..U_n*. The sign
// convention is (ad*_X l)(Y) = -l([X, Y]); with it, exp(s X_j) moves the
// y_{2j-1} coordinate of a g_d covector to y_{2j-1} - s z_1.

#include <cstddef>
#include <span>
#include <vector>

#include "nilcortex/lie_algebra.hpp"
#include "nilcortex/matrix.hpp"
#include "nilcortex/rational.hpp"

namespace nilcortex {

using Covector = RatVector;

/// M(l)_{ij} = l([U_i, U_j]); exactly antisymmetric.
struct SkewForm {
  RatMatrix matrix;
};

/// Basis positions (1-based) where the incremental row rank of M(l) grows.
struct JumpIndexSet {
  std::vector<std::size_t> positions;

  std::size_t size() const { return positions.size(); }
  bool operator==(const JumpIndexSet&) const = default;
};

Covector ad_star(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell);

/// Ad*_{exp X} l = l + ad*_X l. Exact only for nilpotency class <= 2;
/// other algebras throw ClassError.
Covector coadjoint_exp(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell);

SkewForm skew_form(const LieAlgebra& alg, std::span<const Rational> ell);

/// rank M(l) = dim T_l O.
std::size_t orbit_dimension(const LieAlgebra& alg, std::span<const Rational> ell);

/// Span of ad*_{U_b} l over all basis vectors, basis picked greedily in
/// basis order.
Subspace tangent_space(const LieAlgebra& alg, std::span<const Rational> ell);

JumpIndexSet jump_indices(const LieAlgebra& alg, std::span<const Rational> ell);

/// Generic layer of g_d: l(Z_1) != 0. Throws DimensionError unless
/// ell has length 4d.
bool layer_predicate_gd(std::size_t d, std::span<const Rational> ell);

}  // namespace nilcortex
