#include "nilcortex/coadjoint.hpp"

#include <string>

namespace nilcortex {

namespace {

void check_dims(const LieAlgebra& alg, std::span<const Rational> ell) {
  if (ell.size() != alg.dim())
    throw DimensionError("covector has length " + std::to_string(ell.size()) + ", algebra dimension is " +
                         std::to_string(alg.dim()));
}

}  // namespace

Covector ad_star(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell) {
  check_dims(alg, ell);
  check_dims(alg, x);
  const std::size_t n = alg.dim();
  Covector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      Rational pairing = 0;
      for (const auto& [m, c] : alg.structure(i, k))
        if (sgn(ell[m]) != 0) pairing += c * ell[m];
      if (sgn(pairing) != 0) out[k] -= x[i] * pairing;
    }
  }
  return out;
}

Covector coadjoint_exp(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell) {
  if (!alg.is_two_step()) {
    const auto cls = alg.nilpotency_class();
    throw ClassError("Ad*(exp X) = Id + ad*X needs nilpotency class <= 2, algebra has " +
                     (cls ? "class " + std::to_string(*cls) : std::string("no finite class")));
  }
  return add(ell, ad_star(alg, x, ell));
}

SkewForm skew_form(const LieAlgebra& alg, std::span<const Rational> ell) {
  check_dims(alg, ell);
  const std::size_t n = alg.dim();
  SkewForm form{RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = 0;
      for (const auto& [k, c] : alg.structure(i, j)) v += c * ell[k];
      form.matrix(i, j) = v;
      form.matrix(j, i) = -v;
    }
  return form;
}

std::size_t orbit_dimension(const LieAlgebra& alg, std::span<const Rational> ell) {
  return rank(skew_form(alg, ell).matrix);
}

Subspace tangent_space(const LieAlgebra& alg, std::span<const Rational> ell) {
  check_dims(alg, ell);
  std::vector<RatVector> images;
  for (std::size_t b = 0; b < alg.dim(); ++b) images.push_back(ad_star(alg, unit_vector(alg.dim(), b), ell));
  return Subspace(alg.dim(), images);
}

JumpIndexSet jump_indices(const LieAlgebra& alg, std::span<const Rational> ell) {
  const auto ranks = incremental_row_ranks(skew_form(alg, ell).matrix);
  JumpIndexSet out;
  std::size_t prev = 0;
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    if (ranks[j] > prev) out.positions.push_back(j + 1);
    prev = ranks[j];
  }
  return out;
}

bool layer_predicate_gd(std::size_t d, std::span<const Rational> ell) {
  if (ell.size() != 4 * d)
    throw DimensionError("g_" + std::to_string(d) + " covector must have length " + std::to_string(4 * d));
  return sgn(ell[0]) != 0;
}

}  // namespace nilcortex
