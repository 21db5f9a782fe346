#pragma once

// Test-side oracles, deliberately primitive and independent of the library
// code paths they are used to check.

#include "adelekit/number_field.hpp"

namespace adelekit::testing {

// Valuation by repeated trial division (no mpz_remove).
inline std::int64_t oracle_int_valuation(long p, Int n) {
  if (n == 0) throw std::logic_error("oracle: valuation of zero");
  if (n < 0) n = -n;
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::int64_t oracle_rat_valuation(long p, const Rat& x) {
  return oracle_int_valuation(p, num(x)) - oracle_int_valuation(p, den(x));
}

// Quadratic-residue classification: exhaustive search at odd p, the mod-8
// character at 2.
inline int oracle_kronecker(const Int& a, long p) {
  if (p == 2) {
    Int r = mod_floor(a, 8);
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  Int r = mod_floor(a, p);
  if (r == 0) return 0;
  for (long x = 0; x < p; ++x)
    if (mod_floor(Int(x) * Int(x) - r, p) == 0) return 1;
  return -1;
}

// Prime-ideal valuation of an integral element through norm arithmetic:
//   inert:    a_P(a + b*w) = min(a_p(a), a_p(b))
//   ramified: a_P(x) = a_p(N(x))
// (split places are not determined by the norm alone and are cross-checked
// via the sum rule a_P + a_Pbar = a_p(N) instead).
inline std::int64_t oracle_unsplit_valuation(const QuadraticField& K, const PrimeIdeal& P,
                                             const FieldElement& x) {
  long p = static_cast<long>(P.p.get_si());
  if (P.f == 2) {
    if (x.a == 0) return oracle_rat_valuation(p, x.b);  // zero coordinate: +infinity
    if (x.b == 0) return oracle_rat_valuation(p, x.a);
    return std::min(oracle_rat_valuation(p, x.a), oracle_rat_valuation(p, x.b));
  }
  if (P.e != 2) throw std::logic_error("oracle: use the sum rule at split places");
  return oracle_rat_valuation(p, norm_trace(K, x).first);
}

}  // namespace adelekit::testing
