#pragma once

// Exact integer/rational arithmetic on top of GMP, plus the handful of
// elementary number-theory routines the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adelekit/errors.hpp"

namespace adelekit {

using Int = mpz_class;
using Rat = mpq_class;

// Checked narrowing; mpz values that leave the int64 range are outside desk
// scale everywhere this is called.
std::int64_t to_i64(const Int& n);

inline bool fits_i64(const Int& n) { return n.fits_slong_p(); }

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

inline Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) fail(Errc::ParseError, "zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// "n" when the denominator is one, "n/d" otherwise.
std::string rat_to_string(const Rat& q);
// Always "n/d", the wire format used for absolute values.
std::string rat_to_frac_string(const Rat& q);

bool is_prime(const Int& n);
void require_prime(const Int& p);

// a_p(n) for a nonzero integer: the exponent of p in n.
std::int64_t int_valuation(const Int& p, const Int& n);

// p^e for e >= 0.
Int int_pow(const Int& base, std::uint64_t e);
// q^e with negative exponents allowed (q != 0 when e < 0).
Rat rat_pow(const Rat& base, std::int64_t e);

// Nonnegative remainder in [0, m), m > 0.
Int mod_floor(const Int& x, const Int& m);
// Representative of x mod p in (-p/2, p/2].
Int centered_mod(const Int& x, const Int& p);

// Inverse of a modulo m (gcd(a, m) = 1).
Int mod_inverse(const Int& a, const Int& m);

// Square root of a modulo an odd prime p, if one exists.
// Returns false when a is a non-residue.
bool sqrt_mod(const Int& a, const Int& p, Int& root);

// Full factorization by trial division; adequate for desk-scale operands.
std::vector<std::pair<Int, int>> factor_int(const Int& n);

// Distinct primes dividing n (n != 0).
std::vector<Int> prime_divisors(const Int& n);

}  // namespace adelekit
