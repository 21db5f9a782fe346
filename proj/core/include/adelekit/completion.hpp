#pragma once

// Local completions at finite places as precision-tracked digit expansions.
// An element is either exactly zero or an expansion
//
//   sum_{i >= 0} d_i * pi^(val + i),  d_i canonical residue representatives,
//
// known modulo m_v^prec with digits.size() == prec - val. An expansion with
// no digits (val == prec) is "zero to the available precision", which is a
// weaker statement than ExactZero and is kept distinct throughout.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adelekit/number_field.hpp"

namespace adelekit {

// A residue-field element in coordinates over (1, w); both in [0, p),
// and b = 0 whenever the inertia degree is 1.
struct ResidueElement {
  Int a;
  Int b;

  ResidueElement() : a(0), b(0) {}
  explicit ResidueElement(Int a_) : a(std::move(a_)), b(0) {}
  ResidueElement(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const ResidueElement& o) const { return a == o.a && b == o.b; }
  bool operator<(const ResidueElement& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

class LocalElement {
 public:
  enum class Kind { ExactZero, Expansion };

  static LocalElement exact_zero(FinitePlace place);
  static LocalElement expansion(FinitePlace place, std::int64_t val,
                                std::vector<ResidueElement> digits, std::int64_t prec);
  // Zero to precision N: no known digits.
  static LocalElement zero_to_precision(FinitePlace place, std::int64_t prec);

  const FinitePlace& place() const { return place_; }
  Kind kind() const { return kind_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool has_known_digits() const {
    return kind_ == Kind::Expansion && !digits_.empty();
  }

  std::int64_t val() const;
  std::int64_t prec() const;
  const std::vector<ResidueElement>& digits() const { return digits_; }

  // Lower bound on the valuation usable for precision bookkeeping even when
  // no digit is known.
  std::int64_t val_lower_bound() const;

  // The exact field element the known digits denote.
  FieldElement reconstruct() const;

  std::string to_string() const;

  bool operator==(const LocalElement& o) const;

 private:
  LocalElement(FinitePlace place, Kind kind, std::int64_t val,
               std::vector<ResidueElement> digits, std::int64_t prec)
      : place_(std::move(place)), kind_(kind), val_(val), digits_(std::move(digits)),
        prec_(prec) {}

  FinitePlace place_;
  Kind kind_;
  std::int64_t val_;
  std::vector<ResidueElement> digits_;
  std::int64_t prec_;
};

// The image of x in K_v truncated to absolute precision N. Requires
// N > a_v(x) for nonzero x so at least one digit is produced.
LocalElement local_embed(const FinitePlace& v, const FieldElement& x, std::int64_t N);

enum class LocalOp { Add, Mul, Neg, Inv };

// Arithmetic with conservative precision propagation:
//   add: min(N_x, N_y)      mul: min(N_x + val_y, N_y + val_x)
//   neg: exact               inv: N_x - 2*val_x
LocalElement local_arith(LocalOp op, const LocalElement& x, const LocalElement* y = nullptr);

// Zero for exact zero, of_add(-val) otherwise. An expansion with no known
// digit cannot be told apart from zero and raises IndeterminateValuation.
MultIntZero local_valuation(const LocalElement& x);

// val >= 0. Expansions with no known digit are in m_v^prec, so the answer is
// still definite when prec >= 0.
bool is_local_integer(const LocalElement& x);

// An element of valuation 1 at v, embedded with 8 digits.
LocalElement uniformizer(const FinitePlace& v);

// The canonical residue representatives: {0..p-1} when f = 1, the pairs
// a + b*w with a, b in [0, p) when f = 2. q values, indexed 0..q-1.
ResidueElement residue_rep_by_index(const FinitePlace& v, const Int& index);
// Canonical residue of y, for y with a_v(y) >= 0.
ResidueElement residue_of(const FinitePlace& v, const FieldElement& y);
FieldElement lift_residue(const ResidueElement& r);

// The q^n exact elements sum_{i<n} r_i pi^i covering O_v/m_v^n, enumerated in
// canonical (mixed-radix) order. Capped at 10^6 classes.
std::vector<FieldElement> quotient_rep_elements(const FinitePlace& v, std::uint64_t n);
// The same classes as local integers at precision n.
std::vector<LocalElement> quotient_representatives(const FinitePlace& v, std::uint64_t n);
// Streaming enumeration used by the brute-force verifiers.
void for_each_quotient_rep(const FinitePlace& v, std::uint64_t n,
                           const std::function<void(const FieldElement&)>& fn);

// First n pi-adic digits of an integral x; well defined on x mod m_v^n and
// injective there. pi must be a uniformizer at the same place.
std::vector<ResidueElement> to_finite_coeffs(const LocalElement& x, std::uint64_t n,
                                             const LocalElement& pi);

// sigma(x) as a complex number; real places have exact zero imaginary part.
std::complex<double> infinite_embed(const NumberField& K, const InfinitePlaceData& sigma,
                                    const FieldElement& x);

}  // namespace adelekit
