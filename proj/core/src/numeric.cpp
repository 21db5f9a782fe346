#include "adelekit/numeric.hpp"

namespace adelekit {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroHasNoExponent: return "ZeroHasNoExponent";
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadBase: return "BadBase";
    case Errc::KindPlaceMismatch: return "KindPlaceMismatch";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DegenerateD: return "DegenerateD";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::BadPlace: return "BadPlace";
    case Errc::PlaceMismatch: return "PlaceMismatch";
    case Errc::CannotInvert: return "CannotInvert";
    case Errc::IndeterminateValuation: return "IndeterminateValuation";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotSAdele: return "NotSAdele";
    case Errc::NotInOpen: return "NotInOpen";
    case Errc::ZeroRadius: return "ZeroRadius";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

std::int64_t to_i64(const Int& n) {
  if (!n.fits_slong_p()) fail(Errc::BudgetExceeded, "integer exceeds 64-bit range: " + n.get_str());
  return static_cast<std::int64_t>(n.get_si());
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_frac_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

void require_prime(const Int& p) {
  if (!is_prime(p)) fail(Errc::NotPrime, p.get_str() + " is not prime");
}

std::int64_t int_valuation(const Int& p, const Int& n) {
  if (n == 0) fail(Errc::ZeroHasNoExponent, "valuation of zero integer");
  Int rest;
  unsigned long v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return static_cast<std::int64_t>(v);
}

Int int_pow(const Int& base, std::uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rat rat_pow(const Rat& base, std::int64_t e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) fail(Errc::CannotInvert, "0 to a negative power");
    return Rat(0);
  }
  std::uint64_t mag = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-e);
  Rat r(int_pow(num(base), mag), int_pow(den(base), mag));
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int centered_mod(const Int& x, const Int& p) {
  Int r = mod_floor(x, p);
  if (2 * r > p) r -= p;
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(Errc::CannotInvert, a.get_str() + " has no inverse mod " + m.get_str());
  return r;
}

namespace {

Int pow_mod(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool sqrt_mod(const Int& a0, const Int& p, Int& root) {
  Int a = mod_floor(a0, p);
  if (a == 0) {
    root = 0;
    return true;
  }
  if (p == 2) {
    root = a;
    return true;
  }
  Int half = (p - 1) / 2;
  if (pow_mod(a, half, p) != 1) return false;  // Euler's criterion

  // Tonelli-Shanks. p odd, a a quadratic residue.
  if (mod_floor(p, 4) == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
    return true;
  }
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  Int z = 2;
  while (pow_mod(z, half, p) != p - 1) ++z;
  Int m(static_cast<long>(s));
  Int c = pow_mod(z, q, p);
  Int t = pow_mod(a, q, p);
  Int r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Int tt = t;
    while (tt != 1) {
      tt = mod_floor(tt * tt, p);
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = mod_floor(b * b, p);
    m = i;
    c = mod_floor(b * b, p);
    t = mod_floor(t * c, p);
    r = mod_floor(r * b, p);
  }
  root = r;
  return true;
}

std::vector<std::pair<Int, int>> factor_int(const Int& n0) {
  if (n0 == 0) fail(Errc::ZeroHasNoExponent, "cannot factor zero");
  std::vector<std::pair<Int, int>> out;
  Int n = abs(n0);
  auto strip = [&](const Int& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  Int p = 5;
  // 6k +/- 1 wheel; desk-scale operands keep this fast.
  while (p * p <= n) {
    strip(p);
    strip(p + 2);
    p += 6;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factor_int(n)) out.push_back(p);
  return out;
}

}  // namespace adelekit
