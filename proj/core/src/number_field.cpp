#include "adelekit/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace adelekit {

QuadraticField QuadraticField::make(Int d) {
  if (d == 0 || d == 1) fail(Errc::DegenerateD, "d must not be 0 or 1");
  for (auto& [p, e] : factor_int(d))
    if (e >= 2) fail(Errc::NotSquarefree, d.get_str() + " is divisible by " + p.get_str() + "^2");
  OmegaKind k = mod_floor(d, 4) == 1 ? OmegaKind::HalfOnePlusSqrtD : OmegaKind::SqrtD;
  Int disc = k == OmegaKind::HalfOnePlusSqrtD ? d : Int(4 * d);
  return QuadraticField(std::move(d), k, std::move(disc));
}

FieldElement fe_add(const FieldElement& x, const FieldElement& y) {
  return {x.a + y.a, x.b + y.b};
}

FieldElement fe_sub(const FieldElement& x, const FieldElement& y) {
  return {x.a - y.a, x.b - y.b};
}

FieldElement fe_neg(const FieldElement& x) { return {-x.a, -x.b}; }

FieldElement fe_scale(const Rat& c, const FieldElement& x) { return {c * x.a, c * x.b}; }

FieldElement fe_mul(const NumberField& K, const FieldElement& x, const FieldElement& y) {
  if (K.is_rational()) {
    if (x.b != 0 || y.b != 0) fail(Errc::FieldMismatch, "nonzero w-part over Q");
    return FieldElement(x.a * y.a);
  }
  // (a + bw)(c + ew) with w^2 = -min_poly_c - min_poly_b * w.
  const QuadraticField& Q = K.quad();
  Rat cross = x.a * y.b + x.b * y.a;
  Rat ww = x.b * y.b;
  Rat c = Rat(Q.min_poly_c());
  Rat b = Rat(Q.min_poly_b());
  return {x.a * y.a - ww * c, cross - ww * b};
}

FieldElement fe_conj(const NumberField& K, const FieldElement& x) {
  if (K.is_rational()) return x;
  // Roots of x^2 + bx + c sum to -b, so conj(w) = -b - w.
  Rat b = Rat(K.quad().min_poly_b());
  return {x.a - b * x.b, -x.b};
}

Rat fe_norm(const NumberField& K, const FieldElement& x) {
  if (K.is_rational()) return x.a;
  return norm_trace(K.quad(), x).first;
}

FieldElement fe_inv(const NumberField& K, const FieldElement& x) {
  if (x.is_zero()) fail(Errc::CannotInvert, "inverse of zero");
  if (K.is_rational()) return FieldElement(1 / x.a);
  Rat n = fe_norm(K, x);
  return fe_scale(1 / n, fe_conj(K, x));
}

FieldElement fe_div(const NumberField& K, const FieldElement& x, const FieldElement& y) {
  return fe_mul(K, x, fe_inv(K, y));
}

FieldElement fe_pow(const NumberField& K, const FieldElement& x, std::int64_t e) {
  FieldElement base = e >= 0 ? x : fe_inv(K, x);
  FieldElement acc(Rat(1));
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) acc = fe_mul(K, acc, base);
  return acc;
}

std::string fe_to_string(const FieldElement& x) {
  if (x.b == 0) return rat_to_string(x.a);
  std::string wpart = rat_to_string(x.b) + " w";
  if (x.a == 0) return wpart;
  return rat_to_string(x.a) + (x.b > 0 ? "+" : "") + wpart;
}

std::pair<Rat, Rat> norm_trace(const QuadraticField& K, const FieldElement& x) {
  if (K.omega_kind() == OmegaKind::SqrtD) {
    Rat d(K.d());
    return {x.a * x.a - d * x.b * x.b, 2 * x.a};
  }
  Rat t((K.d() - 1) / 4);
  return {x.a * x.a + x.a * x.b - t * x.b * x.b, 2 * x.a + x.b};
}

bool Hnf2::contains(const Int& x0, const Int& x1) const {
  if (!mpz_divisible_p(x0.get_mpz_t(), h00.get_mpz_t())) return false;
  Int k0 = x0 / h00;
  Int rest = x1 - k0 * h10;
  return mpz_divisible_p(rest.get_mpz_t(), h11.get_mpz_t()) != 0;
}

Hnf2 Hnf2::from_columns(const std::vector<std::pair<Int, Int>>& cols) {
  // Incremental insertion keeping a triangular basis: v1 = (a, b) with a > 0
  // pivoting the 1-coordinate, v2 = (0, c) with c > 0.
  Int a = 0, b = 0, c = 0;
  auto insert_second = [&](Int y) {
    if (y == 0) return;
    if (c == 0) {
      c = abs(y);
    } else {
      Int g;
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
      c = g;
    }
  };
  for (const auto& [x, y] : cols) {
    if (x == 0) {
      insert_second(y);
      continue;
    }
    if (a == 0) {
      a = abs(x);
      b = x > 0 ? y : -y;
      continue;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    Int nb = s * b + t * y;
    // The discarded directions land in the pure-w sublattice.
    insert_second((a / g) * y - (x / g) * b);
    a = g;
    b = nb;
  }
  if (a == 0 || c == 0) fail(Errc::BadPlace, "lattice is not full rank");
  return {a, mod_floor(b, c), c};
}

Hnf2 hnf_mul(const QuadraticField& K, const Hnf2& A, const Hnf2& B) {
  NumberField F = NumberField::of(K);
  FieldElement a1{Rat(A.h00), Rat(A.h10)}, a2{Rat(0), Rat(A.h11)};
  FieldElement b1{Rat(B.h00), Rat(B.h10)}, b2{Rat(0), Rat(B.h11)};
  std::vector<std::pair<Int, Int>> cols;
  for (const auto& u : {a1, a2})
    for (const auto& v : {b1, b2}) {
      FieldElement w = fe_mul(F, u, v);
      cols.emplace_back(num(w.a), num(w.b));
    }
  return Hnf2::from_columns(cols);
}

Hnf2 hnf_pow(const QuadraticField& K, const Hnf2& A, std::uint64_t k) {
  Hnf2 r = Hnf2::identity();
  for (std::uint64_t i = 0; i < k; ++i) r = hnf_mul(K, r, A);
  return r;
}

Int PrimeIdeal::omega_residue() const {
  if (f != 1) fail(Errc::BadPlace, "no single residue root at an inert place");
  return mod_floor(-num(gen2.a), p);
}

namespace {

// Roots of x^2 + bx + c mod p, sorted. Brute force below 10^5 keeps the path
// used by the small-prime suites independent of any residue-symbol logic.
std::vector<Int> quadratic_roots_mod(const Int& b, const Int& c, const Int& p) {
  std::vector<Int> roots;
  if (p < 100000) {
    Int bm = mod_floor(b, p), cm = mod_floor(c, p);
    for (Int x = 0; x < p; ++x)
      if (mod_floor(x * x + bm * x + cm, p) == 0) roots.push_back(x);
    return roots;
  }
  Int disc = mod_floor(b * b - 4 * c, p);
  Int inv2 = mod_inverse(2, p);
  if (disc == 0) {
    roots.push_back(mod_floor(-b * inv2, p));
    return roots;
  }
  Int s;
  if (!sqrt_mod(disc, p, s)) return roots;
  roots.push_back(mod_floor((-b + s) * inv2, p));
  roots.push_back(mod_floor((-b - s) * inv2, p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

PrimeIdeal build_prime(const QuadraticField& K, const Int& p, const Int& root, int e, int f) {
  PrimeIdeal P;
  P.p = p;
  P.e = e;
  P.f = f;
  if (f == 2) {
    P.gen2 = FieldElement();  // (p, 0) = (p)
    P.hnf = Hnf2::principal_integer(p);
    return P;
  }
  // Ideal (p, w - root); the constant is centered so output is canonical.
  P.gen2 = FieldElement{Rat(centered_mod(-root, p)), Rat(1)};
  NumberField F = NumberField::of(K);
  FieldElement gw = fe_mul(F, P.gen2, FieldElement{Rat(0), Rat(1)});
  P.hnf = Hnf2::from_columns({{p, 0},
                              {0, p},
                              {num(P.gen2.a), num(P.gen2.b)},
                              {num(gw.a), num(gw.b)}});
  return P;
}

}  // namespace

std::vector<std::pair<PrimeIdeal, int>> factor_rational_prime(const QuadraticField& K,
                                                              const Int& p) {
  require_prime(p);
  std::vector<Int> roots = quadratic_roots_mod(K.min_poly_b(), K.min_poly_c(), p);

  std::vector<std::pair<PrimeIdeal, int>> out;
  if (roots.empty()) {
    out.emplace_back(build_prime(K, p, 0, 1, 2), 1);
  } else if (roots.size() == 1) {
    out.emplace_back(build_prime(K, p, roots[0], 2, 1), 2);
  } else {
    for (const Int& r : roots) out.emplace_back(build_prime(K, p, r, 1, 1), 1);
    std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
      if (lhs.first.gen2.a != rhs.first.gen2.a) return lhs.first.gen2.a < rhs.first.gen2.a;
      return lhs.first.gen2.b < rhs.first.gen2.b;
    });
  }

  // Fundamental identity: sum of e*f must be the degree, and the product of
  // the factors must recover (p).
  int sum_ef = 0;
  Hnf2 prod = Hnf2::identity();
  for (const auto& [P, e] : out) {
    sum_ef += P.e * P.f;
    prod = hnf_mul(K, prod, hnf_pow(K, P.hnf, static_cast<std::uint64_t>(e)));
    if (P.hnf.det() != int_pow(p, static_cast<std::uint64_t>(P.f)))
      fail(Errc::BadPlace, "prime ideal index mismatch over " + p.get_str());
  }
  if (sum_ef != 2 || !(prod == Hnf2::principal_integer(p)))
    fail(Errc::BadPlace, "factorization of " + p.get_str() + " failed verification");
  return out;
}

bool ideal_pow_membership(const QuadraticField& K, const PrimeIdeal& P, std::uint64_t k,
                          const FieldElement& x) {
  if (!x.is_integral()) fail(Errc::NotIntegral, fe_to_string(x) + " is not integral");
  if (k == 0) return true;
  Hnf2 pk = hnf_pow(K, P.hnf, k);
  return pk.contains(num(x.a), num(x.b));
}

AdditiveValue prime_valuation_additive(const QuadraticField& K, const PrimeIdeal& P,
                                       const FieldElement& x) {
  if (x.is_zero()) return AdditiveValue::infinity();
  // Clear denominators: x = y/m with y integral, then
  // a_P(x) = a_P(y) - e * a_p(m).
  Int m;
  mpz_lcm(m.get_mpz_t(), den(x.a).get_mpz_t(), den(x.b).get_mpz_t());
  FieldElement y = fe_scale(Rat(m), x);
  Int nrm = num(norm_trace(K, y).first);
  std::int64_t bound = int_valuation(P.p, nrm) + 1;

  std::int64_t val = 0;
  Hnf2 pk = Hnf2::identity();
  for (std::int64_t k = 1; k <= bound; ++k) {
    pk = hnf_mul(K, pk, P.hnf);
    if (!pk.contains(num(y.a), num(y.b))) break;
    val = k;
  }
  return AdditiveValue::finite(Int(val) - Int(P.e) * int_valuation(P.p, m));
}

MultIntZero prime_valuation_mult(const QuadraticField& K, const PrimeIdeal& P,
                                 const FieldElement& x) {
  AdditiveValue a = prime_valuation_additive(K, P, x);
  if (a.is_infinity()) return MultIntZero::zero();
  return MultIntZero::of_add(-a.value());
}

std::vector<InfinitePlaceData> infinite_places(const QuadraticField& K) {
  if (K.d() > 0)
    return {{InfinitePlaceData::Kind::Real, +1}, {InfinitePlaceData::Kind::Real, -1}};
  return {{InfinitePlaceData::Kind::Complex, 0}};
}

std::vector<InfinitePlaceData> infinite_places(const NumberField& K) {
  if (K.is_rational()) return {{InfinitePlaceData::Kind::Real, +1}};
  return infinite_places(K.quad());
}

double infinite_abs(const NumberField& K, const InfinitePlaceData& sigma,
                    const FieldElement& x) {
  double a = x.a.get_d();
  double b = x.b.get_d();
  if (K.is_rational()) return std::abs(a);
  const QuadraticField& Q = K.quad();
  double droot = std::sqrt(std::abs(Q.d().get_d()));
  bool half = Q.omega_kind() == OmegaKind::HalfOnePlusSqrtD;
  if (sigma.kind == InfinitePlaceData::Kind::Real) {
    double w = sigma.root_choice > 0 ? droot : -droot;
    if (half) w = (1.0 + w) / 2.0;
    return std::abs(a + b * w);
  }
  double re = half ? a + b / 2.0 : a;
  double im = half ? b * droot / 2.0 : b * droot;
  return std::hypot(re, im);
}

namespace {

// Factorizations keyed by (d, p); initialization is idempotent so a benign
// race would only recompute identical data, but we serialize anyway.
class FactorCache {
 public:
  std::shared_ptr<const std::vector<std::pair<PrimeIdeal, int>>> get(const QuadraticField& K,
                                                                     const Int& p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(K.d(), p);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto value = std::make_shared<const std::vector<std::pair<PrimeIdeal, int>>>(
        factor_rational_prime(K, p));
    cache_.emplace(key, value);
    return value;
  }

  static FactorCache& instance() {
    static FactorCache cache;
    return cache;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<Int, Int>, std::shared_ptr<const std::vector<std::pair<PrimeIdeal, int>>>>
      cache_;
};

}  // namespace

FinitePlace FinitePlace::of_rational(Int p) {
  require_prime(p);
  return FinitePlace(NumberField::rationals(), std::move(p), 0, nullptr);
}

FinitePlace FinitePlace::over(const NumberField& K, const Int& p, int index) {
  if (K.is_rational()) {
    if (index != 0) fail(Errc::BadPlace, "Q has a single place over each prime");
    return of_rational(p);
  }
  auto factors = FactorCache::instance().get(K.quad(), p);
  if (index < 0 || static_cast<std::size_t>(index) >= factors->size())
    fail(Errc::BadPlace, "no factor with index " + std::to_string(index) + " over " + p.get_str());
  auto ideal = std::make_shared<const PrimeIdeal>((*factors)[static_cast<std::size_t>(index)].first);
  return FinitePlace(K, p, index, std::move(ideal));
}

const PrimeIdeal& FinitePlace::ideal() const {
  if (!ideal_) fail(Errc::BadPlace, "places of Q carry no prime ideal");
  return *ideal_;
}

AdditiveValue FinitePlace::additive_valuation(const FieldElement& x) const {
  if (is_rational_place()) {
    if (x.b != 0) fail(Errc::FieldMismatch, "nonzero w-part over Q");
    return padic_additive(p_, x.a);
  }
  return prime_valuation_additive(field_.quad(), *ideal_, x);
}

MultIntZero FinitePlace::mult_valuation(const FieldElement& x) const {
  AdditiveValue a = additive_valuation(x);
  if (a.is_infinity()) return MultIntZero::zero();
  return MultIntZero::of_add(-a.value());
}

bool FinitePlace::is_integral(const FieldElement& x) const {
  AdditiveValue a = additive_valuation(x);
  return a.is_infinity() || a.value() >= 0;
}

FieldElement FinitePlace::uniformizer_element() const {
  if (e() == 1) return FieldElement(Rat(p_));
  // Ramified: scan small combinations of the HNF basis for valuation 1,
  // smallest nonnegative coefficients first.
  const Hnf2& H = ideal_->hnf;
  FieldElement b1{Rat(H.h00), Rat(H.h10)}, b2{Rat(0), Rat(H.h11)};
  for (int total = 1; total <= 16; ++total) {
    for (int i = total; i >= 0; --i) {
      int j = total - i;
      for (auto [ci, cj] : {std::pair{i, j}, {i, -j}, {-i, j}, {-i, -j}}) {
        FieldElement cand = fe_add(fe_scale(Rat(ci), b1), fe_scale(Rat(cj), b2));
        if (cand.is_zero()) continue;
        AdditiveValue v = additive_valuation(cand);
        if (!v.is_infinity() && v.value() == 1) return cand;
      }
    }
  }
  fail(Errc::BadPlace, "no uniformizer found near the HNF basis");
}

std::string FinitePlace::spec_string() const {
  if (is_rational_place()) return "p:" + p_.get_str();
  return "d:" + field_.quad().d().get_str() + ",p:" + p_.get_str() + ",i:" +
         std::to_string(index_);
}

bool FinitePlace::operator==(const FinitePlace& o) const {
  return field_ == o.field_ && p_ == o.p_ && index_ == o.index_;
}

bool FinitePlace::operator<(const FinitePlace& o) const {
  Int dl = field_.is_rational() ? Int(0) : field_.quad().d();
  Int dr = o.field_.is_rational() ? Int(0) : o.field_.quad().d();
  if (dl != dr) return dl < dr;
  if (p_ != o.p_) return p_ < o.p_;
  return index_ < o.index_;
}

std::vector<FinitePlace> places_over(const NumberField& K, const Int& p) {
  if (K.is_rational()) return {FinitePlace::of_rational(p)};
  auto factors = FactorCache::instance().get(K.quad(), p);
  std::vector<FinitePlace> out;
  for (int i = 0; i < static_cast<int>(factors->size()); ++i)
    out.push_back(FinitePlace::over(K, p, i));
  return out;
}

std::vector<FinitePlace> denominator_places(const NumberField& K, const FieldElement& x) {
  Int m;
  mpz_lcm(m.get_mpz_t(), den(x.a).get_mpz_t(), den(x.b).get_mpz_t());
  std::vector<FinitePlace> out;
  if (m == 1) return out;
  for (const Int& p : prime_divisors(m))
    for (const FinitePlace& v : places_over(K, p)) out.push_back(v);
  return out;
}

}  // namespace adelekit
