#pragma once

// Absolute values and discrete valuations on the rationals: the p-adic
// family, the usual archimedean absolute value, the c^(-a(x)) bridge between
// them, and an axiom-checking harness that evaluates the defining clauses on
// sample pairs with exact arithmetic.

#include <string>
#include <vector>

#include "adelekit/numeric.hpp"
#include "adelekit/value_group.hpp"

namespace adelekit {

// Value of an additive valuation: an integer, or infinity exactly at zero.
// Infinity is a distinct state, not a sentinel.
class AdditiveValue {
 public:
  static AdditiveValue infinity() { return AdditiveValue(); }
  static AdditiveValue finite(Int n) { return AdditiveValue(std::move(n)); }

  bool is_infinity() const { return infinite_; }
  const Int& value() const {
    if (infinite_) fail(Errc::ZeroHasNoExponent, "finite value of infinity");
    return value_;
  }

  bool operator==(const AdditiveValue& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

  // Infinity is the top element.
  bool operator<(const AdditiveValue& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  bool operator<=(const AdditiveValue& o) const { return *this < o || *this == o; }
  bool operator>=(const AdditiveValue& o) const { return !(*this < o); }

  friend AdditiveValue operator+(const AdditiveValue& a, const AdditiveValue& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return finite(a.value_ + b.value_);
  }

  static AdditiveValue min(const AdditiveValue& a, const AdditiveValue& b) {
    return a < b ? a : b;
  }

  std::string to_string() const { return infinite_ ? "inf" : value_.get_str(); }

 private:
  AdditiveValue() : infinite_(true), value_(0) {}
  explicit AdditiveValue(Int n) : infinite_(false), value_(std::move(n)) {}

  bool infinite_;
  Int value_;
};

// A place of the rationals: the archimedean one, or a prime.
class RationalPlace {
 public:
  static RationalPlace infinity() { return RationalPlace(); }
  static RationalPlace finite(Int p) {
    require_prime(p);
    return RationalPlace(std::move(p));
  }

  bool is_infinity() const { return infinity_; }
  const Int& prime() const {
    if (infinity_) fail(Errc::KindPlaceMismatch, "no prime at the infinite place");
    return p_;
  }

  bool operator==(const RationalPlace& o) const {
    return infinity_ == o.infinity_ && (infinity_ || p_ == o.p_);
  }

  std::string to_string() const { return infinity_ ? "inf" : ("p:" + p_.get_str()); }

 private:
  RationalPlace() : infinity_(true), p_(0) {}
  explicit RationalPlace(Int p) : infinity_(false), p_(std::move(p)) {}

  bool infinity_;
  Int p_;
};

// a_p(x): exponent of p in x, infinity at zero.
AdditiveValue padic_additive(const Int& p, const Rat& x);

// v_p(x) = of_add(-a_p(x)) for x != 0, zero at zero.
MultIntZero padic_mult(const Int& p, const Rat& x);

// |x|_a = c^(-a_p(x)) for x != 0 and 0 at zero; c = p gives |.|_p. Exact.
Rat abs_from_valuation(const Int& p, const Rat& c, const Rat& x);

Rat archimedean_abs(const Rat& x);

enum class AxiomKind { AbsoluteValue, AdditiveValuation, MultValuation };

struct ValuationFailure {
  std::string clause;  // e.g. "abs.triangle", "add.ultrametric"
  Rat x;
  Rat y;
};

struct ValuationReport {
  std::string axiom_id;  // which definition was checked
  std::size_t sample_count = 0;
  std::vector<ValuationFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Evaluates every clause of the chosen definition on every sample pair.
// Exact throughout; finite-place absolute values also get the ultrametric
// clause. AdditiveValuation/MultValuation require a finite place.
ValuationReport axiom_check(AxiomKind kind, const RationalPlace& place,
                            const std::vector<std::pair<Rat, Rat>>& samples);

}  // namespace adelekit
