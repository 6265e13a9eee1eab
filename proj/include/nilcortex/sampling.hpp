#pragma once

#include <cstdint>
#include <random>

#include "nilcortex/rational.hpp"

namespace nilcortex {

/// Seeded generator of random rationals p/q with p uniform in
/// [-bound, bound] and q uniform in {1, ..., max_denominator}.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 1000, long max_denominator = 16)
      : engine_(seed), numerator_(-bound, bound), denominator_(1, max_denominator) {}

  Rational next();
  Rational next_nonzero();
  RatVector vector(std::size_t n);
  RatVector nonzero_vector(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<long> numerator_;
  std::uniform_int_distribution<long> denominator_;
};

}  // namespace nilcortex
