#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilcortex/rational.hpp"

namespace nilcortex {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored, so the zero polynomial
/// has no terms.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  /// Throws DimensionError if exps.size() != nvars.
  static SparsePoly monomial(std::size_t nvars, Exponents exps, const Rational& c = 1);
  /// sum_i coeffs[i] * x_i
  static SparsePoly linear(std::span<const Rational> coeffs);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Maximum total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  /// True iff every term has total degree `deg`. The zero polynomial is
  /// homogeneous of every degree.
  bool is_homogeneous(unsigned deg) const;

  /// Coefficient of the given exponent vector (0 when absent).
  Rational coefficient(const Exponents& exps) const;

  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  /// p(s_0, ..., s_{n-1}); every substitution must live in the same space,
  /// which becomes the space of the result.
  SparsePoly compose(std::span<const SparsePoly> substitutions) const;

  SparsePoly partial(std::size_t var) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly operator-() const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  SparsePoly pow(unsigned e) const;

  bool operator==(const SparsePoly&) const = default;

  /// Terms in descending lexicographic exponent order, e.g.
  /// "-y1*y4 + y2*y3". Variables default to x0, x1, ...
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_same_space(const SparsePoly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

}  // namespace nilcortex
