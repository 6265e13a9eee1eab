#pragma once

// Cortex of the dual of a two-step nilpotent Lie algebra.
//
// For class-2 algebras the cortex is the closure of the image set
// {ad*_X l : X in g, l in g*}. For g_d that closure is the cone
// {z = 0, Q_d(y) = 0}: necessity is the polynomial identity
// Q_d o (image parametrization) = 0, sufficiency is constructive via
// explicit witness sequences.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilcortex/coadjoint.hpp"
#include "nilcortex/lie_algebra.hpp"
#include "nilcortex/polynomial.hpp"

namespace nilcortex {

/// ad*_X l; always in z^perp.
Covector image_point(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell);

/// Q_d composed with the tangent-space coordinates
///   y_{2j-1} -> -a_j z_1 (j <= d),  y_{2j} -> -a_j z_{j+1} (j < d),
///   y_{2d} -> -a_d (z_2 + ... + z_d),
/// as a polynomial in (a_1..a_d, z_1..z_d). The zero polynomial certifies
/// that Q_d vanishes on the image, hence on its closure.
SparsePoly pullback_on_image(std::size_t d);

/// z = 0 and Q_d(y) = 0; x is unconstrained.
bool cortex_membership_gd(std::size_t d, std::span<const Rational> ell);

struct WitnessStep {
  Rational epsilon;
  Covector start;       // l(eps), tends to 0
  RatVector generator;  // X(eps), coordinates in the g_d basis
  Covector image;       // Ad*_{exp X(eps)} l(eps)
  Covector residual;    // image - target; nonzero only in z
  Rational bound;       // eps * max(1, max_j |y_{2j} / y_{2j-1}|)
};

struct WitnessSchedule {
  std::size_t d;
  Covector target;
  std::vector<WitnessStep> steps;
};

/// For a target (0, y, x) on the cortex variety with y_{2j-1} != 0
/// (j < d), takes
///   l(eps) = eps Z_1* + sum_j eps (y_{2j}/y_{2j-1}) Z_{j+1}*
///   X(eps) = -sum_j (y_{2j-1}/eps) X_j + sum_k (x_k/eps) Y_{2k-1}
/// so that Ad*_{exp X(eps)} l(eps) agrees with the target in every y and x
/// coordinate and differs by l(eps) in z.
///
/// Throws MembershipError off the variety, DegenerateStratumError when some
/// y_{2j-1} = 0 (j < d), ArgumentError for a non-positive epsilon.
WitnessSchedule witness_sequence(std::size_t d, std::span<const Rational> target,
                                 std::span<const Rational> epsilons);

/// A point of the cortex variety with every y_{2j-1} != 0 (j < d) whose
/// max-norm distance to `target` is O(eta). Returns the target itself when
/// it is already on the generic stratum.
Covector perturb_to_generic_stratum(std::size_t d, std::span<const Rational> target, const Rational& eta);

struct PerturbedStep {
  Rational eta;
  Rational epsilon;
  Covector perturbed_target;
  Covector start;
  Covector image;
  Rational start_norm;  // max |l(eps)|
  Rational distance;    // max |image - target|
};

struct PerturbedWitness {
  std::size_t d;
  Covector target;
  std::vector<PerturbedStep> steps;  // eta-major grid
};

/// Two-parameter schedule for targets on the degenerate stratum: perturb to
/// the generic stratum at each eta, then run the exact schedule at each
/// epsilon. Convergence requires epsilon << eta (l(eps) grows like
/// eps / eta).
PerturbedWitness perturbed_witness(std::size_t d, std::span<const Rational> target,
                                   std::span<const Rational> etas, std::span<const Rational> epsilons);

/// True iff every generator takes its value at 0 on ell.
bool icor_membership(std::span<const SparsePoly> generators, std::span<const Rational> ell);

/// D_b p(l) = sum_k (dp/du_k)(l) (ad*_{U_b} l)_k. p is invariant under the
/// connected group iff D_b p = 0 for every b.
SparsePoly coadjoint_derivation(const LieAlgebra& alg, const SparsePoly& p, std::size_t b);

struct ClassifierReport {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t z_perp_dim = 0;
  std::size_t trials = 0;
  std::size_t generic_orbit_dim = 0;  // max over samples
  std::size_t min_orbit_dim = 0;
  std::size_t codim = 0;              // z_perp_dim - generic_orbit_dim
  bool cor_equals_z_perp = false;
  /// Whether every sampled orbit (not only generic ones) has codim <= 1.
  bool all_sampled_codim_le_1 = false;
  std::string verdict;
};

/// Orbit dimensions at `trials` seeded random rational covectors. When
/// generic orbits have codimension 0 or 1 in z^perp the cortex is all of
/// z^perp; otherwise the verdict is inconclusive. Throws ClassError for
/// algebras that are not two-step.
ClassifierReport codim_classifier(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed);

struct CloudOptions {
  std::size_t samples = 10000;
  std::vector<double> scales{1e-1, 1e-2, 1e-3};
  double window_lo = 0.5;
  double window_hi = 2.0;
  double ball_radius = 2.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Floating-point sample of the normalized cortex directions.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
};

/// Sample k uses scale delta = scales[k % scales.size()]: l uniform in the
/// max-norm ball of radius delta, X uniform in the ball of radius
/// ball_radius scaled by 1/delta. Images ad*_X l whose max-norm lies in
/// [window_lo, window_hi] are kept, normalized to max-norm 1, in sample
/// order. Each sample has its own generator derived from (seed, k), so the
/// output does not depend on the thread count.
PointCloud approximate_cortex(const LieAlgebra& alg, const CloudOptions& options);

}  // namespace nilcortex
