#include "nilcortex/gd_family.hpp"

#include <string>

namespace nilcortex {

namespace {

void require_d(std::size_t d) {
  if (d < 2) throw ArgumentError("g_d needs d >= 2, got " + std::to_string(d));
}

}  // namespace

std::vector<std::string> gd_basis_labels(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back("Z" + std::to_string(i));
  for (std::size_t j = 1; j <= 2 * d; ++j) out.push_back("Y" + std::to_string(j));
  for (std::size_t k = 1; k <= d; ++k) out.push_back("X" + std::to_string(k));
  return out;
}

std::vector<std::string> gd_coordinate_names(std::size_t d) {
  auto out = gd_basis_labels(d);
  for (auto& s : out) s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return out;
}

GdDescriptor make_gd(std::size_t d) {
  require_d(d);
  const GdLayout at{d};
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 1; i <= d; ++i) brackets.push_back({at.x(i), at.y(2 * i - 1), {{at.z(1), Rational(1)}}});
  for (std::size_t k = 1; k < d; ++k) brackets.push_back({at.x(k), at.y(2 * k), {{at.z(k + 1), Rational(1)}}});
  SparseVec tail;
  for (std::size_t i = 2; i <= d; ++i) tail.emplace_back(at.z(i), Rational(1));
  brackets.push_back({at.x(d), at.y(2 * d), tail});
  return {d, LieAlgebra(gd_basis_labels(d), std::move(brackets))};
}

SparsePoly cortex_poly(std::size_t d) {
  require_d(d);
  const GdLayout at{d};
  const std::size_t n = at.dim();
  auto var = [n](std::size_t idx) { return SparsePoly::variable(n, idx); };

  SparsePoly odd_product = SparsePoly::constant(n, 1);
  for (std::size_t j = 1; j < d; ++j) odd_product = odd_product * var(at.y(2 * j - 1));

  SparsePoly sum(n);
  for (std::size_t i = 1; i < d; ++i) {
    SparsePoly term = var(at.y(2 * i));
    for (std::size_t j = 1; j < d; ++j)
      if (j != i) term = term * var(at.y(2 * j - 1));
    sum += term;
  }
  return var(at.y(2 * d - 1)) * sum - var(at.y(2 * d)) * odd_product;
}

std::vector<SparsePoly> invariant_generators(std::size_t d) {
  require_d(d);
  const GdLayout at{d};
  const std::size_t n = at.dim();
  auto var = [n](std::size_t idx) { return SparsePoly::variable(n, idx); };

  std::vector<SparsePoly> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(var(at.z(i)));
  for (std::size_t k = 1; k < d; ++k)
    out.push_back(var(at.z(1)) * var(at.y(2 * k)) - var(at.z(k + 1)) * var(at.y(2 * k - 1)));
  SparsePoly tail(n);
  for (std::size_t i = 2; i <= d; ++i) tail += var(at.z(i));
  out.push_back(var(at.z(1)) * var(at.y(2 * d)) - tail * var(at.y(2 * d - 1)));
  return out;
}

Covector cross_section_map(std::size_t d, std::span<const Rational> ell) {
  require_d(d);
  if (!layer_predicate_gd(d, ell)) throw OutOfLayerError("cross-section map needs z_1 != 0");
  const GdLayout at{d};
  const Rational& z1 = ell[at.z(1)];

  Covector out(at.dim());
  for (std::size_t i = 1; i <= d; ++i) out[at.z(i)] = ell[at.z(i)];
  for (std::size_t k = 1; k < d; ++k)
    out[at.y(2 * k)] = ell[at.y(2 * k)] - ell[at.z(k + 1)] / z1 * ell[at.y(2 * k - 1)];
  Rational tail = 0;
  for (std::size_t i = 2; i <= d; ++i) tail += ell[at.z(i)];
  out[at.y(2 * d)] = ell[at.y(2 * d)] - tail / z1 * ell[at.y(2 * d - 1)];
  return out;
}

JumpIndexSet expected_jump_set(std::size_t d) {
  require_d(d);
  JumpIndexSet out;
  for (std::size_t p = d + 1; p <= 3 * d - 1; p += 2) out.positions.push_back(p);
  for (std::size_t p = 3 * d + 1; p <= 4 * d; ++p) out.positions.push_back(p);
  return out;
}

}  // namespace nilcortex
