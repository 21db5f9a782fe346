#pragma once

// Quadratic number fields Q(sqrt d): elements in the integral basis (1, w),
// ideal arithmetic in 2x2 Hermite normal form, factorization of rational
// primes into prime ideals, prime-ideal valuations, and the archimedean
// places. The plain rationals ride along as the degree-one case so that the
// completion/adele/topology layers can treat both uniformly.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelekit/valuations.hpp"

namespace adelekit {

enum class OmegaKind { SqrtD, HalfOnePlusSqrtD };

class QuadraticField {
 public:
  // Validates d: nonzero, not 1, squarefree.
  static QuadraticField make(Int d);

  const Int& d() const { return d_; }
  OmegaKind omega_kind() const { return omega_; }
  const Int& discriminant() const { return disc_; }

  // Minimal polynomial of w: x^2 + b x + c.
  Int min_poly_b() const { return omega_ == OmegaKind::SqrtD ? Int(0) : Int(-1); }
  Int min_poly_c() const {
    return omega_ == OmegaKind::SqrtD ? Int(-d_) : Int(-((d_ - 1) / 4));
  }

  bool operator==(const QuadraticField& o) const { return d_ == o.d_; }

 private:
  QuadraticField(Int d, OmegaKind k, Int disc)
      : d_(std::move(d)), omega_(k), disc_(std::move(disc)) {}

  Int d_;
  OmegaKind omega_;
  Int disc_;
};

inline QuadraticField make_field(Int d) { return QuadraticField::make(std::move(d)); }

// Q itself or a quadratic field; the context every element operation takes.
class NumberField {
 public:
  NumberField() : quad_(std::nullopt) {}  // Q

  static NumberField rationals() { return NumberField(std::nullopt); }
  static NumberField quadratic(Int d) { return NumberField(QuadraticField::make(std::move(d))); }
  static NumberField of(QuadraticField k) { return NumberField(std::move(k)); }

  bool is_rational() const { return !quad_.has_value(); }
  int degree() const { return is_rational() ? 1 : 2; }
  const QuadraticField& quad() const {
    if (!quad_) fail(Errc::FieldMismatch, "operation requires a quadratic field");
    return *quad_;
  }

  bool operator==(const NumberField& o) const {
    if (is_rational() != o.is_rational()) return false;
    return is_rational() || quad_->d() == o.quad_->d();
  }

  std::string to_string() const {
    return is_rational() ? "Q" : ("Q(sqrt(" + quad_->d().get_str() + "))");
  }

 private:
  explicit NumberField(std::optional<QuadraticField> q) : quad_(std::move(q)) {}
  std::optional<QuadraticField> quad_;
};

// a + b*w in the basis (1, w); b stays 0 over Q.
struct FieldElement {
  Rat a;
  Rat b;

  FieldElement() : a(0), b(0) {}
  explicit FieldElement(Rat a_) : a(std::move(a_)), b(0) {}
  FieldElement(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }
  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b; }
};

FieldElement fe_add(const FieldElement& x, const FieldElement& y);
FieldElement fe_sub(const FieldElement& x, const FieldElement& y);
FieldElement fe_neg(const FieldElement& x);
FieldElement fe_mul(const NumberField& K, const FieldElement& x, const FieldElement& y);
FieldElement fe_conj(const NumberField& K, const FieldElement& x);
FieldElement fe_inv(const NumberField& K, const FieldElement& x);
FieldElement fe_div(const NumberField& K, const FieldElement& x, const FieldElement& y);
FieldElement fe_scale(const Rat& c, const FieldElement& x);
FieldElement fe_pow(const NumberField& K, const FieldElement& x, std::int64_t e);
Rat fe_norm(const NumberField& K, const FieldElement& x);
std::string fe_to_string(const FieldElement& x);

// (N(x), Tr(x)), exact.
std::pair<Rat, Rat> norm_trace(const QuadraticField& K, const FieldElement& x);

// Lower-triangular column HNF of a rank-2 sublattice of Z + Z*w:
// basis columns (h00, h10) and (0, h11); h00, h11 > 0; 0 <= h10 < h11.
struct Hnf2 {
  Int h00, h10, h11;

  Int det() const { return h00 * h11; }
  bool operator==(const Hnf2& o) const {
    return h00 == o.h00 && h10 == o.h10 && h11 == o.h11;
  }
  // x0 + x1*w in the lattice?
  bool contains(const Int& x0, const Int& x1) const;

  static Hnf2 identity() { return {1, 0, 1}; }
  static Hnf2 principal_integer(const Int& n) { return {abs(n), 0, abs(n)}; }
  // HNF of the span of the given coordinate columns (must be full rank).
  static Hnf2 from_columns(const std::vector<std::pair<Int, Int>>& cols);
};

// Product of two ideals given by HNF bases.
Hnf2 hnf_mul(const QuadraticField& K, const Hnf2& A, const Hnf2& B);
Hnf2 hnf_pow(const QuadraticField& K, const Hnf2& A, std::uint64_t k);

// A finite place of a quadratic field: prime ideal over p with its HNF basis,
// ramification data and a second generator, so the ideal is (p, gen2).
struct PrimeIdeal {
  Int p;
  Hnf2 hnf;
  int e = 1;
  int f = 1;
  FieldElement gen2;

  // For f = 1, the residue of w: the root r in [0, p) with w = r mod the ideal.
  Int omega_residue() const;

  bool operator==(const PrimeIdeal& o) const {
    return p == o.p && hnf == o.hnf;
  }
};

// p*O_K = prod ideal_i^{e_i}; multiplicities are the e_i. Factors are sorted
// by the coordinates of their second generator for deterministic output.
std::vector<std::pair<PrimeIdeal, int>> factor_rational_prime(const QuadraticField& K,
                                                              const Int& p);

// x in ideal^k, decided through the HNF of ideal^k. x must lie in O_K.
bool ideal_pow_membership(const QuadraticField& K, const PrimeIdeal& P, std::uint64_t k,
                          const FieldElement& x);

// a_P(x); infinity exactly at x = 0.
AdditiveValue prime_valuation_additive(const QuadraticField& K, const PrimeIdeal& P,
                                       const FieldElement& x);
// of_add(-a_P(x)), zero at x = 0.
MultIntZero prime_valuation_mult(const QuadraticField& K, const PrimeIdeal& P,
                                 const FieldElement& x);

struct InfinitePlaceData {
  enum class Kind { Real, Complex };
  Kind kind;
  // For Real places: +1 picks the positive square root of d, -1 the negative.
  int root_choice;

  bool operator==(const InfinitePlaceData& o) const {
    return kind == o.kind && (kind == Kind::Complex || root_choice == o.root_choice);
  }
};

// d > 0: two real places; d < 0: one complex place (conjugate pair).
std::vector<InfinitePlaceData> infinite_places(const QuadraticField& K);
// Uniform version: Q has the single real place given by the identity.
std::vector<InfinitePlaceData> infinite_places(const NumberField& K);

// |sigma(x)| in floating point; relative error <= 1e-12 for coordinates of
// magnitude <= 1e6.
double infinite_abs(const NumberField& K, const InfinitePlaceData& sigma,
                    const FieldElement& x);

// A finite place of Q or of a quadratic field, identified by (field, p, index)
// where index selects a factor of p in the canonical ordering. Factorizations
// are memoized; lookups may run concurrently.
class FinitePlace {
 public:
  static FinitePlace of_rational(Int p);
  // The index-th prime over p in K (canonical order).
  static FinitePlace over(const NumberField& K, const Int& p, int index = 0);

  const NumberField& field() const { return field_; }
  const Int& p() const { return p_; }
  int index() const { return index_; }
  bool is_rational_place() const { return field_.is_rational(); }
  const PrimeIdeal& ideal() const;

  int e() const { return is_rational_place() ? 1 : ideal().e; }
  int f() const { return is_rational_place() ? 1 : ideal().f; }
  // Residue field size q = p^f.
  Int q() const { return is_rational_place() ? p_ : int_pow(p_, static_cast<std::uint64_t>(f())); }

  AdditiveValue additive_valuation(const FieldElement& x) const;
  MultIntZero mult_valuation(const FieldElement& x) const;
  bool is_integral(const FieldElement& x) const;

  // An exact element of valuation 1: p unless the place ramifies, in which
  // case a small combination of the HNF basis found by scanning.
  FieldElement uniformizer_element() const;

  // "p:3" over Q, "d:-1,p:2,i:0" over a quadratic field.
  std::string spec_string() const;

  bool operator==(const FinitePlace& o) const;
  bool operator<(const FinitePlace& o) const;

 private:
  FinitePlace(NumberField field, Int p, int index, std::shared_ptr<const PrimeIdeal> ideal)
      : field_(std::move(field)), p_(std::move(p)), index_(index), ideal_(std::move(ideal)) {}

  NumberField field_;
  Int p_;
  int index_;
  std::shared_ptr<const PrimeIdeal> ideal_;  // null over Q
};

// All places of K over p, canonically ordered.
std::vector<FinitePlace> places_over(const NumberField& K, const Int& p);

// Places appearing in the denominator ideal of x (candidates for poles).
std::vector<FinitePlace> denominator_places(const NumberField& K, const FieldElement& x);

}  // namespace adelekit
