#pragma once

// Test-only reference computations, deliberately independent of the
// elimination code in the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "nilcortex/matrix.hpp"
#include "nilcortex/rational.hpp"

namespace nilcortex::oracle {

/// Leibniz expansion over all permutations.
inline Rational determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational acc = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational t = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && sgn(t) != 0; ++i) t *= m[i][perm[i]];
    acc += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

namespace detail {

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline bool some_minor_nonzero(const RatMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
      if (sgn(determinant(sub)) != 0) return true;
    } while (next_subset(cols, m.cols()));
  } while (next_subset(rows, m.rows()));
  return false;
}

}  // namespace detail

/// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t brute_rank(const RatMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    if (detail::some_minor_nonzero(m, k)) return k;
  return 0;
}

inline RatMatrix first_rows(const RatMatrix& m, std::size_t count) {
  RatMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace nilcortex::oracle

namespace nilcortex::oracle {

/// [x, y] in g_d straight from the bracket table, no structure constants.
/// Coordinates (z_1..z_d, y_1..y_2d, x_1..x_d).
inline RatVector gd_bracket(std::size_t d, const RatVector& u, const RatVector& v) {
  auto Y = [&](const RatVector& w, std::size_t j) { return w[d + j - 1]; };
  auto X = [&](const RatVector& w, std::size_t k) { return w[3 * d + k - 1]; };
  RatVector out(4 * d);
  // coefficient of [X_k, Y_j] is X(u,k)Y(v,j) - X(v,k)Y(u,j)
  auto pair = [&](std::size_t k, std::size_t j) -> Rational { return X(u, k) * Y(v, j) - X(v, k) * Y(u, j); };
  for (std::size_t i = 1; i <= d; ++i) out[0] += pair(i, 2 * i - 1);
  for (std::size_t k = 1; k < d; ++k) out[k] += pair(k, 2 * k);
  const Rational last = pair(d, 2 * d);
  for (std::size_t i = 2; i <= d; ++i) out[i - 1] += last;
  return out;
}

/// (ad*_X l)_b = -l([X, U_b]) via gd_bracket.
inline RatVector gd_ad_star(std::size_t d, const RatVector& x, const RatVector& ell) {
  const std::size_t n = 4 * d;
  RatVector out(n);
  for (std::size_t b = 0; b < n; ++b) {
    RatVector e(n);
    e[b] = 1;
    const RatVector br = gd_bracket(d, x, e);
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) s += ell[k] * br[k];
    out[b] = -s;
  }
  return out;
}

/// Q_d evaluated directly from its defining sum.
inline Rational gd_q(std::size_t d, const RatVector& ell) {
  auto y = [&](std::size_t j) { return ell[d + j - 1]; };
  Rational sum = 0;
  for (std::size_t i = 1; i < d; ++i) {
    Rational t = y(2 * i);
    for (std::size_t j = 1; j < d; ++j)
      if (j != i) t *= y(2 * j - 1);
    sum += t;
  }
  Rational prod = 1;
  for (std::size_t j = 1; j < d; ++j) prod *= y(2 * j - 1);
  return y(2 * d - 1) * sum - y(2 * d) * prod;
}

}  // namespace nilcortex::oracle

#include "nilcortex/sampling.hpp"

namespace nilcortex::oracle {

/// Random point on z = 0, Q_d = 0 with y_{2j-1} != 0: y_{2d} is solved
/// from the defining equation.
inline RatVector gd_variety_target(std::size_t d, RationalSampler& s) {
  RatVector t(4 * d);
  auto y = [&](std::size_t j) -> Rational& { return t[d + j - 1]; };
  for (std::size_t j = 1; j <= d; ++j) y(2 * j - 1) = s.next_nonzero();
  for (std::size_t j = 1; j < d; ++j) y(2 * j) = s.next();
  for (std::size_t k = 1; k <= d; ++k) t[3 * d + k - 1] = s.next();
  Rational ratios = 0;
  for (std::size_t j = 1; j < d; ++j) ratios += y(2 * j) / y(2 * j - 1);
  y(2 * d) = y(2 * d - 1) * ratios;
  return t;
}

}  // namespace nilcortex::oracle
