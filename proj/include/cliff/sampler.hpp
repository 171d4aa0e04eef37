#pragma once

// Seeded sampler for the randomized identity sweeps. Draws use raw modulo on
// mt19937_64 output so sequences are identical across standard libraries.

#include <cstdint>
#include <random>

#include "cliff/scalar.hpp"

namespace cliff {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() & 1u; }

  // num/den with |num| <= 9 and 1 <= den <= 5.
  Rational rational(long max_num = 9, long max_den = 5) {
    const long num = integer(-max_num, max_num);
    Rational q(num, integer(1, max_den));
    q.canonicalize();
    return q;
  }

  template <CliffordScalar S>
  S real() {
    return ScalarTraits<S>::from_rational(rational());
  }
  template <CliffordScalar S>
  S complex() {
    auto re = rational();
    return ScalarTraits<S>::from_rational(re, rational());
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cliff
