#include "adelekit/completion.hpp"

#include <sstream>

namespace adelekit {

namespace {

constexpr std::uint64_t kClassBudget = 1000000;  // cap on enumerated residue classes

Rat rat_mod_p(const Rat& y, const Int& p) {
  // y has a_p(y) >= 0, so its reduced denominator is coprime to p.
  return Rat(mod_floor(num(y) * mod_inverse(den(y), p), p));
}

}  // namespace

LocalElement LocalElement::exact_zero(FinitePlace place) {
  return LocalElement(std::move(place), Kind::ExactZero, 0, {}, 0);
}

LocalElement LocalElement::expansion(FinitePlace place, std::int64_t val,
                                     std::vector<ResidueElement> digits, std::int64_t prec) {
  if (val + static_cast<std::int64_t>(digits.size()) != prec)
    fail(Errc::PrecisionTooLow, "digit count does not match precision window");
  if (!digits.empty() && digits.front().is_zero())
    fail(Errc::BadPlace, "leading digit of an expansion must be nonzero");
  return LocalElement(std::move(place), Kind::Expansion, val, std::move(digits), prec);
}

LocalElement LocalElement::zero_to_precision(FinitePlace place, std::int64_t prec) {
  return LocalElement(std::move(place), Kind::Expansion, prec, {}, prec);
}

std::int64_t LocalElement::val() const {
  if (kind_ == Kind::ExactZero || digits_.empty())
    fail(Errc::IndeterminateValuation, "no leading digit is known");
  return val_;
}

std::int64_t LocalElement::prec() const {
  if (kind_ == Kind::ExactZero)
    fail(Errc::PrecisionTooLow, "exact zero has unbounded precision");
  return prec_;
}

std::int64_t LocalElement::val_lower_bound() const {
  if (kind_ == Kind::ExactZero)
    fail(Errc::PrecisionTooLow, "exact zero has unbounded valuation");
  return digits_.empty() ? prec_ : val_;
}

FieldElement LocalElement::reconstruct() const {
  if (kind_ == Kind::ExactZero || digits_.empty()) return FieldElement();
  const NumberField& K = place_.field();
  FieldElement pi = place_.uniformizer_element();
  FieldElement acc;  // digits from most significant down
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
    acc = fe_add(fe_mul(K, acc, pi), lift_residue(*it));
  FieldElement shift(Rat(1));
  std::int64_t v = val_;
  FieldElement base = v >= 0 ? pi : fe_inv(K, pi);
  for (std::int64_t i = 0; i < (v >= 0 ? v : -v); ++i) shift = fe_mul(K, shift, base);
  return fe_mul(K, acc, shift);
}

std::string LocalElement::to_string() const {
  if (kind_ == Kind::ExactZero) return "0 (exact)";
  std::ostringstream os;
  os << "val=" << val_ << " N=" << prec_ << " digits=[";
  bool pair = place_.f() == 2;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) os << ",";
    if (pair)
      os << "(" << digits_[i].a.get_str() << "," << digits_[i].b.get_str() << ")";
    else
      os << digits_[i].a.get_str();
  }
  os << "] (base " << place_.q().get_str() << ")";
  return os.str();
}

bool LocalElement::operator==(const LocalElement& o) const {
  if (!(place_ == o.place_) || kind_ != o.kind_) return false;
  if (kind_ == Kind::ExactZero) return true;
  return val_ == o.val_ && prec_ == o.prec_ && digits_ == o.digits_;
}

ResidueElement residue_rep_by_index(const FinitePlace& v, const Int& index) {
  if (index < 0 || index >= v.q()) fail(Errc::BadPlace, "residue index out of range");
  if (v.f() == 1) return ResidueElement(index);
  return ResidueElement(mod_floor(index, v.p()), index / v.p());
}

FieldElement lift_residue(const ResidueElement& r) {
  return FieldElement{Rat(r.a), Rat(r.b)};
}

ResidueElement residue_of(const FinitePlace& v, const FieldElement& y) {
  const Int& p = v.p();
  if (v.is_rational_place()) return ResidueElement(num(rat_mod_p(y.a, p)));
  if (v.f() == 2) return ResidueElement(num(rat_mod_p(y.a, p)), num(rat_mod_p(y.b, p)));

  // f = 1 over a quadratic field. Write y = z / (p^s * m') with z integral and
  // p coprime to m'; clear m' with an inverse mod p^(s+1). At a ramified place
  // P^(2s) = (p^s), so z' / p^s is integral on the nose. At a split place we
  // first multiply by conj(gen2)^s, which has valuation 0 at this place and
  // >= 1 at the conjugate, to land z' in (p^s); the residue is then corrected
  // by the inverse residue of that factor.
  const NumberField& K = v.field();
  const PrimeIdeal& P = v.ideal();
  Int m;
  mpz_lcm(m.get_mpz_t(), den(y.a).get_mpz_t(), den(y.b).get_mpz_t());
  std::int64_t s = int_valuation(p, m);
  Int mprime = m / int_pow(p, static_cast<std::uint64_t>(s));
  FieldElement z = fe_scale(Rat(m), y);

  Int correction = 1;  // multiplied into z; undone on the residue at the end
  if (mprime != 1) {
    Int u = mod_inverse(mprime, int_pow(p, static_cast<std::uint64_t>(s) + 1));
    z = fe_scale(Rat(u), z);
    // u * m' = 1 mod p^(s+1), so no residue correction is needed for it.
  }
  Int r0 = P.omega_residue();
  if (P.e == 1 && s > 0) {
    FieldElement beta = fe_conj(K, P.gen2);
    Int beta_res = mod_floor(num(beta.a) + num(beta.b) * r0, p);
    for (std::int64_t i = 0; i < s; ++i) z = fe_mul(K, z, beta);
    correction = mod_floor(int_pow(beta_res, static_cast<std::uint64_t>(s)), p);
  }
  if (s > 0) {
    Int ps = int_pow(p, static_cast<std::uint64_t>(s));
    if (!mpz_divisible_p(num(z.a).get_mpz_t(), ps.get_mpz_t()) ||
        !mpz_divisible_p(num(z.b).get_mpz_t(), ps.get_mpz_t()))
      fail(Errc::NotIntegral, "residue of an element with a pole at the place");
    z = fe_scale(Rat(Int(1), ps), z);
  }
  Int res = mod_floor(num(z.a) + num(z.b) * r0, p);
  if (correction != 1) res = mod_floor(res * mod_inverse(correction, p), p);
  return ResidueElement(res);
}

namespace {

// Digits of x at v starting from its exact valuation val = a_v(x). x != 0.
std::vector<ResidueElement> digit_stream(const FinitePlace& v, const FieldElement& x,
                                         std::int64_t val, std::int64_t count) {
  const NumberField& K = v.field();
  FieldElement pi = v.uniformizer_element();
  FieldElement y = x;
  {
    FieldElement base = val >= 0 ? fe_inv(K, pi) : pi;
    for (std::int64_t i = 0; i < (val >= 0 ? val : -val); ++i) y = fe_mul(K, y, base);
  }
  std::vector<ResidueElement> digits;
  digits.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) {
    ResidueElement d = residue_of(v, y);
    digits.push_back(d);
    y = fe_div(K, fe_sub(y, lift_residue(d)), pi);
  }
  return digits;
}

}  // namespace

LocalElement local_embed(const FinitePlace& v, const FieldElement& x, std::int64_t N) {
  if (x.is_zero()) return LocalElement::exact_zero(v);
  std::int64_t val = to_i64(v.additive_valuation(x).value());
  if (N <= val)
    fail(Errc::PrecisionTooLow,
         "precision " + std::to_string(N) + " <= valuation " + std::to_string(val));
  return LocalElement::expansion(v, val, digit_stream(v, x, val, N - val), N);
}

namespace {

// Embed an exact value at precision N, degrading to the empty expansion when
// the value vanishes to that precision. Used for arithmetic results, which
// are only known modulo m_v^N.
LocalElement embed_known_mod(const FinitePlace& v, const FieldElement& x, std::int64_t N) {
  if (x.is_zero()) return LocalElement::zero_to_precision(v, N);
  AdditiveValue a = v.additive_valuation(x);
  if (AdditiveValue::finite(N) <= a) return LocalElement::zero_to_precision(v, N);
  return local_embed(v, x, N);
}

}  // namespace

LocalElement local_arith(LocalOp op, const LocalElement& x, const LocalElement* y) {
  const FinitePlace& v = x.place();
  if (op == LocalOp::Add || op == LocalOp::Mul) {
    if (y == nullptr) fail(Errc::PlaceMismatch, "binary operation needs two operands");
    if (!(v == y->place())) fail(Errc::PlaceMismatch, "operands live at different places");
  }

  switch (op) {
    case LocalOp::Neg: {
      if (x.is_exact_zero()) return x;
      return embed_known_mod(v, fe_neg(x.reconstruct()), x.prec());
    }
    case LocalOp::Inv: {
      if (x.is_exact_zero()) fail(Errc::CannotInvert, "exactly zero");
      if (!x.has_known_digits())
        fail(Errc::CannotInvert, "zero to available precision (all known digits vanish)");
      std::int64_t N = x.prec() - 2 * x.val();
      return embed_known_mod(v, fe_inv(v.field(), x.reconstruct()), N);
    }
    case LocalOp::Add: {
      if (x.is_exact_zero()) return *y;
      if (y->is_exact_zero()) return x;
      std::int64_t N = std::min(x.prec(), y->prec());
      return embed_known_mod(v, fe_add(x.reconstruct(), y->reconstruct()), N);
    }
    case LocalOp::Mul: {
      if (x.is_exact_zero() || y->is_exact_zero()) return LocalElement::exact_zero(v);
      std::int64_t N =
          std::min(x.prec() + y->val_lower_bound(), y->prec() + x.val_lower_bound());
      return embed_known_mod(v, fe_mul(v.field(), x.reconstruct(), y->reconstruct()), N);
    }
  }
  fail(Errc::PlaceMismatch, "unknown operation");
}

MultIntZero local_valuation(const LocalElement& x) {
  if (x.is_exact_zero()) return MultIntZero::zero();
  if (!x.has_known_digits())
    fail(Errc::IndeterminateValuation,
         "element vanishes to precision " + std::to_string(x.prec()));
  return MultIntZero::of_add(Int(-x.val()));
}

bool is_local_integer(const LocalElement& x) {
  if (x.is_exact_zero()) return true;
  if (x.has_known_digits()) return x.val() >= 0;
  if (x.prec() >= 0) return true;  // x in m_v^prec, already integral
  fail(Errc::IndeterminateValuation,
       "element vanishes to negative precision " + std::to_string(x.prec()));
}

LocalElement uniformizer(const FinitePlace& v) {
  return local_embed(v, v.uniformizer_element(), 9);
}

void for_each_quotient_rep(const FinitePlace& v, std::uint64_t n,
                           const std::function<void(const FieldElement&)>& fn) {
  if (n < 1) fail(Errc::BadPlace, "need n >= 1 residue levels");
  Int q = v.q();
  Int total = int_pow(q, n);
  if (total > kClassBudget)
    fail(Errc::BudgetExceeded,
         "q^n = " + total.get_str() + " classes exceed the enumeration budget");
  const NumberField& K = v.field();
  FieldElement pi = v.uniformizer_element();
  std::uint64_t count = static_cast<std::uint64_t>(total.get_ui());
  for (std::uint64_t i = 0; i < count; ++i) {
    Int rest(static_cast<unsigned long>(i));
    FieldElement acc;
    FieldElement power(Rat(1));
    for (std::uint64_t j = 0; j < n; ++j) {
      Int digit = mod_floor(rest, q);
      rest /= q;
      acc = fe_add(acc, fe_mul(K, lift_residue(residue_rep_by_index(v, digit)), power));
      power = fe_mul(K, power, pi);
    }
    fn(acc);
  }
}

std::vector<FieldElement> quotient_rep_elements(const FinitePlace& v, std::uint64_t n) {
  std::vector<FieldElement> out;
  for_each_quotient_rep(v, n, [&](const FieldElement& x) { out.push_back(x); });
  return out;
}

std::vector<LocalElement> quotient_representatives(const FinitePlace& v, std::uint64_t n) {
  std::vector<LocalElement> out;
  for_each_quotient_rep(v, n, [&](const FieldElement& x) {
    out.push_back(x.is_zero() ? LocalElement::exact_zero(v)
                              : local_embed(v, x, static_cast<std::int64_t>(n)));
  });
  return out;
}

std::vector<ResidueElement> to_finite_coeffs(const LocalElement& x, std::uint64_t n,
                                             const LocalElement& pi) {
  if (!(x.place() == pi.place())) fail(Errc::PlaceMismatch, "digit map at a different place");
  if (!pi.has_known_digits() || pi.val() != 1)
    fail(Errc::BadPlace, "pi is not a uniformizer");
  std::vector<ResidueElement> out(n);
  if (x.is_exact_zero()) return out;
  if (x.prec() < static_cast<std::int64_t>(n))
    fail(Errc::InsufficientPrecision,
         "need " + std::to_string(n) + " digits, have precision " + std::to_string(x.prec()));
  if (x.has_known_digits() && x.val() < 0)
    fail(Errc::NotIntegral, "digit map needs an integral element");
  if (!x.has_known_digits()) return out;  // zero mod m_v^prec, prec >= n
  for (std::uint64_t i = 0; i < n; ++i) {
    std::int64_t pos = static_cast<std::int64_t>(i) - x.val();
    if (pos >= 0 && pos < static_cast<std::int64_t>(x.digits().size()))
      out[i] = x.digits()[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::complex<double> infinite_embed(const NumberField& K, const InfinitePlaceData& sigma,
                                    const FieldElement& x) {
  double a = x.a.get_d();
  double b = x.b.get_d();
  if (K.is_rational()) return {a, 0.0};
  const QuadraticField& Q = K.quad();
  double droot = std::sqrt(std::abs(Q.d().get_d()));
  bool half = Q.omega_kind() == OmegaKind::HalfOnePlusSqrtD;
  if (sigma.kind == InfinitePlaceData::Kind::Real) {
    double w = sigma.root_choice > 0 ? droot : -droot;
    if (half) w = (1.0 + w) / 2.0;
    return {a + b * w, 0.0};
  }
  double re = half ? a + b / 2.0 : a;
  double im = half ? b * droot / 2.0 : b * droot;
  return {re, im};
}

}  // namespace adelekit
