#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilcortex/matrix.hpp"
#include "nilcortex/rational.hpp"

namespace nilcortex {

/// (basis index, coefficient) pairs, sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// One stored structure-constant entry: [U_i, U_j] = sum_k coeffs_k U_k.
/// Indices are 0-based here; files and reports use 1-based positions.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseVec coeffs;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on an
/// ordered basis U_1..U_n. Only [U_i, U_j] with i < j is stored;
/// [U_j, U_i] is its negation and [U_i, U_i] = 0. Immutable.
class LieAlgebra {
 public:
  /// Entries with i > j are stored negated; i == j, out-of-range indices and
  /// repeated pairs throw ArgumentError.
  LieAlgebra(std::vector<std::string> labels, std::vector<BracketEntry> brackets);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Expansion of [U_i, U_j] for any i, j (antisymmetry synthesized).
  const SparseVec& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Nonzero stored brackets with i < j, ordered by (i, j).
  std::vector<BracketEntry> entries() const;

  /// [x, y] for coordinate vectors x, y.
  RatVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Length of the lower central series; nullopt when it stabilizes at a
  /// nonzero ideal. Abelian algebras have class 1, the zero algebra 0.
  std::optional<std::size_t> nilpotency_class() const { return class_; }
  bool is_two_step() const { return class_ && *class_ <= 2; }

 private:
  std::optional<std::size_t> compute_class() const;

  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::optional<std::size_t> class_;
};

struct ValidationReport {
  bool jacobi_ok = true;
  /// First failing triple (1-based, i < j < k) when jacobi_ok is false.
  std::optional<std::array<std::size_t, 3>> jacobi_witness;
  std::optional<std::size_t> nilpotency_class;

  bool two_step() const { return jacobi_ok && nilpotency_class && *nilpotency_class <= 2; }
};

/// Checks Jacobi on every basis triple and reports the nilpotency class.
/// Never throws on an invalid algebra.
ValidationReport validate(const LieAlgebra& alg);

/// Linear subspace of Q^n with a linearly independent basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Keeps the independent vectors among `spanning`, in order.
  Subspace(std::size_t ambient, std::span<const RatVector> spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  bool contains(std::span<const Rational> v) const;
  /// Same subspace (mutual containment).
  bool same_as(const Subspace& o) const;

 private:
  std::size_t ambient_;
  std::vector<RatVector> basis_;
};

/// Kernel of x -> (ad x) as a map g -> End(g).
Subspace center(const LieAlgebra& alg);

/// Matrix with rows indexed by (j, k) and columns by i, entry = coefficient
/// of U_k in [U_i, U_j]. Its kernel is the center.
RatMatrix stacked_ad_matrix(const LieAlgebra& alg);

/// True iff ell vanishes on every vector of `center`.
bool in_z_perp(const Subspace& center, std::span<const Rational> ell);
bool in_z_perp(const LieAlgebra& alg, std::span<const Rational> ell);

/// Heisenberg algebra h3: basis (X, Y, Z), [X, Y] = Z.
LieAlgebra heisenberg();
/// Abelian algebra of dimension n with labels U1..Un.
LieAlgebra abelian(std::size_t n);

}  // namespace nilcortex
