#pragma once

#include <cstdint>
#include <random>

#include "matpow/matrix.hpp"
#include "matpow/rational.hpp"

namespace matpow {

// Default seed for every randomized suite; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Deterministic sampler. Bounded draws go through modulo reduction of the
// raw 64-bit stream instead of std::uniform_int_distribution, so the same
// seed produces the same values on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Numerator in [-20, 20], denominator in [1, 20].
  Rational rational() {
    Rational r(int_in(-20, 20), static_cast<unsigned long>(int_in(1, 20)));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  // Integer-entry matrix, entries in [lo, hi].
  Matrix int_matrix(int k, long lo, long hi) {
    Matrix a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = Rational(int_in(lo, hi));
    return a;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace matpow
