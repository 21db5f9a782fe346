#include "adelekit/valuations.hpp"

namespace adelekit {

AdditiveValue padic_additive(const Int& p, const Rat& x) {
  require_prime(p);
  if (x == 0) return AdditiveValue::infinity();
  // a_p(a/b) = a_p(a) - a_p(b) on the reduced fraction; only one of the two
  // terms can be nonzero.
  Int vn = int_valuation(p, num(x));
  Int vd = int_valuation(p, den(x));
  return AdditiveValue::finite(vn - vd);
}

MultIntZero padic_mult(const Int& p, const Rat& x) {
  AdditiveValue a = padic_additive(p, x);
  if (a.is_infinity()) return MultIntZero::zero();
  return MultIntZero::of_add(-a.value());
}

Rat abs_from_valuation(const Int& p, const Rat& c, const Rat& x) {
  if (c <= 1) fail(Errc::BadBase, "base must exceed 1, got " + rat_to_string(c));
  AdditiveValue a = padic_additive(p, x);
  if (a.is_infinity()) return Rat(0);
  return rat_pow(c, to_i64(-a.value()));
}

Rat archimedean_abs(const Rat& x) { return abs(x); }

namespace {

struct ClauseChecker {
  ValuationReport& report;
  const Rat& x;
  const Rat& y;

  void require(bool ok, const char* clause) {
    if (!ok) report.failures.push_back({clause, x, y});
  }
};

void check_absolute_value(const RationalPlace& place, const Rat& x, const Rat& y,
                          ValuationReport& report) {
  auto av = [&](const Rat& t) {
    return place.is_infinity() ? archimedean_abs(t)
                               : abs_from_valuation(place.prime(), Rat(place.prime()), t);
  };
  ClauseChecker c{report, x, y};
  c.require((av(x) == 0) == (x == 0), "abs.zero_iff");
  c.require((av(y) == 0) == (y == 0), "abs.zero_iff");
  c.require(av(x * y) == av(x) * av(y), "abs.multiplicative");
  c.require(av(x + y) <= av(x) + av(y), "abs.triangle");
  if (!place.is_infinity())
    c.require(av(x + y) <= std::max(av(x), av(y)), "abs.ultrametric");
}

void check_additive_valuation(const Int& p, const Rat& x, const Rat& y,
                              ValuationReport& report) {
  auto a = [&](const Rat& t) { return padic_additive(p, t); };
  ClauseChecker c{report, x, y};
  c.require(a(x).is_infinity() == (x == 0), "add.infinity_iff");
  c.require(a(y).is_infinity() == (y == 0), "add.infinity_iff");
  c.require(a(x * y) == a(x) + a(y), "add.additive");
  c.require(a(x + y) >= AdditiveValue::min(a(x), a(y)), "add.ultrametric");
}

void check_mult_valuation(const Int& p, const Rat& x, const Rat& y,
                          ValuationReport& report) {
  auto v = [&](const Rat& t) { return padic_mult(p, t); };
  ClauseChecker c{report, x, y};
  c.require(v(Rat(0)) == MultIntZero::zero(), "mult.zero");
  c.require(v(Rat(1)) == MultIntZero::one(), "mult.one");
  c.require(v(x * y) == v(x) * v(y), "mult.multiplicative");
  c.require(v(x + y) <= std::max(v(x), v(y)), "mult.ultrametric");
}

}  // namespace

ValuationReport axiom_check(AxiomKind kind, const RationalPlace& place,
                            const std::vector<std::pair<Rat, Rat>>& samples) {
  if (kind != AxiomKind::AbsoluteValue && place.is_infinity())
    fail(Errc::KindPlaceMismatch, "discrete valuations live at finite places only");

  ValuationReport report;
  switch (kind) {
    case AxiomKind::AbsoluteValue: report.axiom_id = "absolute_value"; break;
    case AxiomKind::AdditiveValuation: report.axiom_id = "additive_valuation"; break;
    case AxiomKind::MultValuation: report.axiom_id = "mult_valuation"; break;
  }
  report.sample_count = samples.size();

  for (const auto& [x, y] : samples) {
    switch (kind) {
      case AxiomKind::AbsoluteValue:
        check_absolute_value(place, x, y, report);
        break;
      case AxiomKind::AdditiveValuation:
        check_additive_valuation(place.prime(), x, y, report);
        break;
      case AxiomKind::MultValuation:
        check_mult_valuation(place.prime(), x, y, report);
        break;
    }
  }
  return report;
}

}  // namespace adelekit
