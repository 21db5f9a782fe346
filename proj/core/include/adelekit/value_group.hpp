#pragma once

// The multiplicative value group: integers under addition, rewritten
// multiplicatively, with an absorbing zero adjoined. Zero is the least
// element and every valuation in this library takes values here.

#include <compare>
#include <cstddef>
#include <string>

#include "adelekit/numeric.hpp"

namespace adelekit {

class MultIntZero {
 public:
  // The absorbing zero, strictly below every nonzero value.
  static MultIntZero zero() { return MultIntZero(); }

  // ofAdd: (Z, +) -> nonzero part under multiplication.
  static MultIntZero of_add(Int n) { return MultIntZero(std::move(n)); }

  static MultIntZero one() { return of_add(0); }

  bool is_zero() const { return zero_; }

  // toAdd: inverse of of_add on the nonzero part.
  const Int& to_add() const {
    if (zero_) fail(Errc::ZeroHasNoExponent, "to_add on the zero value");
    return exp_;
  }

  friend MultIntZero operator*(const MultIntZero& a, const MultIntZero& b) {
    if (a.zero_ || b.zero_) return zero();
    return of_add(a.exp_ + b.exp_);
  }

  bool operator==(const MultIntZero& o) const {
    return zero_ == o.zero_ && (zero_ || exp_ == o.exp_);
  }

  // Total order: zero first, then by exponent.
  std::strong_ordering operator<=>(const MultIntZero& o) const {
    if (zero_ && o.zero_) return std::strong_ordering::equal;
    if (zero_) return std::strong_ordering::less;
    if (o.zero_) return std::strong_ordering::greater;
    int c = cmp(exp_, o.exp_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const {
    return zero_ ? "0" : ("ofAdd(" + exp_.get_str() + ")");
  }

  std::size_t hash() const {
    if (zero_) return 0x9e3779b97f4a7c15ULL;
    return std::hash<std::string>{}(exp_.get_str());
  }

 private:
  MultIntZero() : zero_(true), exp_(0) {}
  explicit MultIntZero(Int n) : zero_(false), exp_(std::move(n)) {}

  bool zero_;
  Int exp_;
};

inline MultIntZero vg_mul(const MultIntZero& a, const MultIntZero& b) { return a * b; }
inline bool vg_le(const MultIntZero& a, const MultIntZero& b) { return a <= b; }

}  // namespace adelekit
