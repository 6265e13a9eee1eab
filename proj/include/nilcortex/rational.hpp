#pragma once

// Exact rational scalars and dense rational vectors.
//
// Rational is GMP's mpq_class: arbitrary precision, always canonical
// (lowest terms, positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcortex/errors.hpp"

namespace nilcortex {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// "p/q", or "p" when q == 1; negative values carry a leading '-'.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", an optional sign ('+', '-', or U+2212), and
/// surrounding whitespace. The result is canonicalized.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated rationals, e.g. "0,0, 1,2,3,6, 0,0".
RatVector parse_rational_list(std::string_view text);
std::string to_string(std::span<const Rational> v, std::string_view sep = ",");

RatVector zero_vector(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector sub(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& s, std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// max_i |v_i|; 0 for the empty vector.
Rational max_abs(std::span<const Rational> v);

}  // namespace nilcortex
