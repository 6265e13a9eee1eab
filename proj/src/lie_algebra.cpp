#include "nilcortex/lie_algebra.hpp"

#include <algorithm>
#include <map>

namespace nilcortex {

namespace {

SparseVec normalized(SparseVec v, std::size_t n) {
  std::map<std::size_t, Rational> acc;
  for (auto& [k, c] : v) {
    if (k >= n) throw ArgumentError("bracket coefficient index " + std::to_string(k + 1) + " out of range");
    acc[k] += c;
  }
  SparseVec out;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) out.emplace_back(k, c);
  return out;
}

SparseVec negated(const SparseVec& v) {
  SparseVec out = v;
  for (auto& [k, c] : out) c = -c;
  return out;
}

// [a, b] where a, b are given as dense vectors; accumulates into out
void accumulate_bracket(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> y,
                        RatVector& out) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& s = alg.structure(i, j);
      if (s.empty()) continue;
      const Rational f = x[i] * y[j];
      for (const auto& [k, c] : s) out[k] += f * c;
    }
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<BracketEntry> brackets)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
  const std::size_t n = dim();
  std::vector<bool> seen(n * n, false);
  for (auto& b : brackets) {
    if (b.i >= n || b.j >= n)
      throw ArgumentError("bracket (" + std::to_string(b.i + 1) + ", " + std::to_string(b.j + 1) +
                          ") out of range for dimension " + std::to_string(n));
    if (b.i == b.j) throw ArgumentError("bracket of U_" + std::to_string(b.i + 1) + " with itself");
    SparseVec v = normalized(std::move(b.coeffs), n);
    std::size_t i = b.i, j = b.j;
    if (i > j) {
      std::swap(i, j);
      v = negated(v);
    }
    if (seen[i * n + j])
      throw ArgumentError("bracket (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ") given twice");
    seen[i * n + j] = true;
    table_[j * n + i] = negated(v);
    table_[i * n + j] = std::move(v);
  }
  class_ = compute_class();
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!structure(i, j).empty()) out.push_back({i, j, structure(i, j)});
  return out;
}

RatVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionError("bracket arguments must have length " + std::to_string(dim()));
  RatVector out(dim());
  accumulate_bracket(*this, x, y, out);
  return out;
}

std::optional<std::size_t> LieAlgebra::compute_class() const {
  const std::size_t n = dim();
  if (n == 0) return 0;
  // C^1 = g, C^{k+1} = [g, C^k]
  std::vector<RatVector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector(n, i));
  // the guard only matters for inputs that violate Jacobi, where the series
  // need not be decreasing
  for (std::size_t k = 1; k <= n + 1; ++k) {
    RowEchelon next(n);
    std::vector<RatVector> next_basis;
    for (std::size_t i = 0; i < n; ++i) {
      const RatVector u = unit_vector(n, i);
      for (const auto& v : current) {
        RatVector w = bracket(u, v);
        if (next.insert(w)) next_basis.push_back(std::move(w));
      }
    }
    if (next_basis.empty()) return k;
    if (next_basis.size() == current.size()) return std::nullopt;
    current = std::move(next_basis);
  }
  return std::nullopt;
}

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  auto basis_bracket = [&](const SparseVec& a, std::size_t u) {
    RatVector out(n);
    for (const auto& [k, c] : a)
      for (const auto& [m, d] : alg.structure(k, u)) out[m] += c * d;
    return out;
  };
  for (std::size_t i = 0; i < n && report.jacobi_ok; ++i)
    for (std::size_t j = i + 1; j < n && report.jacobi_ok; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [[Ui,Uj],Uk] + [[Uj,Uk],Ui] + [[Uk,Ui],Uj]
        RatVector s = basis_bracket(alg.structure(i, j), k);
        s = add(s, basis_bracket(alg.structure(j, k), i));
        s = add(s, basis_bracket(alg.structure(k, i), j));
        if (!is_zero(s)) {
          report.jacobi_ok = false;
          report.jacobi_witness = std::array<std::size_t, 3>{i + 1, j + 1, k + 1};
          break;
        }
      }
  report.nilpotency_class = alg.nilpotency_class();
  return report;
}

Subspace::Subspace(std::size_t ambient, std::span<const RatVector> spanning) : ambient_(ambient) {
  RowEchelon echelon(ambient);
  for (const auto& v : spanning) {
    if (v.size() != ambient) throw DimensionError("subspace vector has wrong length");
    if (echelon.insert(v)) basis_.push_back(v);
  }
}

bool Subspace::contains(std::span<const Rational> v) const {
  RowEchelon echelon(ambient_);
  for (const auto& b : basis_) echelon.insert(b);
  return echelon.contains(v);
}

bool Subspace::same_as(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.dim() != dim()) return false;
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const RatVector& v) { return contains(v); });
}

RatMatrix stacked_ad_matrix(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  RatMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : alg.structure(i, j)) m(j * n + k, i) = c;
  return m;
}

Subspace center(const LieAlgebra& alg) {
  const auto rk = rank_and_kernel(stacked_ad_matrix(alg));
  return Subspace(alg.dim(), rk.kernel);
}

bool in_z_perp(const Subspace& center, std::span<const Rational> ell) {
  if (ell.size() != center.ambient()) throw DimensionError("covector has wrong length");
  return std::all_of(center.basis().begin(), center.basis().end(),
                     [&](const RatVector& z) { return sgn(dot(z, ell)) == 0; });
}

bool in_z_perp(const LieAlgebra& alg, std::span<const Rational> ell) { return in_z_perp(center(alg), ell); }

LieAlgebra heisenberg() { return LieAlgebra({"X", "Y", "Z"}, {{0, 1, {{2, Rational(1)}}}}); }

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("U" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), {});
}

}  // namespace nilcortex
