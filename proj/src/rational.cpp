#include "nilcortex/rational.hpp"

#include <algorithm>
#include <cctype>

namespace nilcortex {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void check_length(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

}  // namespace

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational: '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(n, q);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

RatVector parse_rational_list(std::string_view text) {
  RatVector out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(std::span<const Rational> v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

RatVector zero_vector(std::size_t n) { return RatVector(n); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw ArgumentError("unit vector index out of range");
  RatVector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return sgn(r) == 0; });
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
  check_length(a, b);
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  check_length(a, b);
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scale(const Rational& s, std::span<const Rational> v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  check_length(a, b);
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

Rational max_abs(std::span<const Rational> v) {
  Rational m = 0;
  for (const auto& r : v) {
    Rational a = abs(r);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace nilcortex
