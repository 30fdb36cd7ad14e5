#pragma once

#include <random>
#include <vector>

#include "superchab/integer.hpp"

namespace superchab::testing {

// Seeded generator for property tests; every suite fixes its own seed.
class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = range(lo, hi);
    return v;
  }
  bool coin() { return range(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<size_t>(range(0, static_cast<long>(xs.size()) - 1))];
  }
  Rational rational(long bound) { return frac(range(-bound, bound), range(1, bound)); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace superchab::testing
