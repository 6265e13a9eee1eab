#include "nilcortex/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace nilcortex {

void SparsePoly::check_same_space(const SparsePoly& o) const {
  if (o.nvars_ != nvars_)
    throw DimensionError("polynomials live in different variable spaces (" + std::to_string(nvars_) +
                         " vs " + std::to_string(o.nvars_) + ")");
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArgumentError("variable index " + std::to_string(index) + " out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e));
}

SparsePoly SparsePoly::monomial(std::size_t nvars, Exponents exps, const Rational& c) {
  if (exps.size() != nvars) throw DimensionError("exponent vector has wrong length");
  SparsePoly p(nvars);
  p.add_term(exps, c);
  return p;
}

SparsePoly SparsePoly::linear(std::span<const Rational> coeffs) {
  SparsePoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

unsigned SparsePoly::degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0u));
  return best;
}

bool SparsePoly::is_homogeneous(unsigned deg) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0u) != deg) return false;
  return true;
}

Rational SparsePoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw DimensionError("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                         std::to_string(nvars_));
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_ && sgn(t) != 0; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

double SparsePoly::eval(std::span<const double> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= std::pow(point[i], static_cast<int>(e[i]));
    acc += t;
  }
  return acc;
}

SparsePoly SparsePoly::compose(std::span<const SparsePoly> substitutions) const {
  if (substitutions.size() != nvars_)
    throw DimensionError("compose: " + std::to_string(substitutions.size()) + " substitutions for " +
                         std::to_string(nvars_) + " variables");
  if (nvars_ == 0) return *this;
  const std::size_t target = substitutions.front().nvars();
  for (const auto& s : substitutions)
    if (s.nvars() != target) throw DimensionError("compose: substitutions live in different spaces");

  // powers[i][k] = s_i^k, filled lazily
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * substitutions[i]);
    return cache[k];
  };

  SparsePoly out(target);
  for (const auto& [e, c] : terms_) {
    SparsePoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

SparsePoly SparsePoly::partial(std::size_t var) const {
  if (var >= nvars_) throw ArgumentError("partial: variable index " + std::to_string(var) + " out of range");
  SparsePoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_space(b);
  SparsePoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly out = constant(nvars_, 1);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string SparsePoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };

  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty())
      body = nilcortex::to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = nilcortex::to_string(mag) + "*" + mono;

    if (first)
      out += (sgn(c) < 0 ? "-" : "") + body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace nilcortex
