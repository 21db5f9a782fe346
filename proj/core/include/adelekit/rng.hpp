#pragma once

// Deterministic, platform-independent generator for the seeded suites
// (splitmix64). std:: distributions are implementation-defined, which would
// make --seed runs differ across standard libraries.

#include <cstdint>

#include "adelekit/numeric.hpp"

namespace adelekit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(std::uint32_t numerator, std::uint32_t denominator) {
    return next_u64() % denominator < numerator;
  }

  // num in [-max_num, max_num], den in [1, max_den].
  Rat rational(std::int64_t max_num, std::int64_t max_den) {
    return make_rat(Int(static_cast<long>(range(-max_num, max_num))),
                    Int(static_cast<long>(range(1, max_den))));
  }

  Rat nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    Rat q = rational(max_num, max_den);
    while (q == 0) q = rational(max_num, max_den);
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace adelekit
