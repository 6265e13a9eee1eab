#include "nilcortex/sampling.hpp"

namespace nilcortex {

Rational RationalSampler::next() {
  const long p = numerator_(engine_);
  const long q = denominator_(engine_);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational RationalSampler::next_nonzero() {
  while (true) {
    Rational r = next();
    if (sgn(r) != 0) return r;
  }
}

RatVector RationalSampler::vector(std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = next();
  return v;
}

RatVector RationalSampler::nonzero_vector(std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = next_nonzero();
  return v;
}

}  // namespace nilcortex
