#pragma once

// Executable topology over the finite places: open balls in K_v, basic opens
// of the restricted-product topology, finite ball covers of O_v, and compact
// neighborhood certificates, each paired with an exact checker. Radii are
// strict: x in B_gamma(t) iff v(x - t) < gamma. Closed conditions are
// expressed through the next exponent (v(x) < of_add(k) iff v(x) <=
// of_add(k-1)), so one ball type covers both.

#include <map>
#include <optional>
#include <vector>

#include "adelekit/adele.hpp"

namespace adelekit {

struct Ball {
  FinitePlace place;
  FieldElement center;   // exact element of K, read in K_v
  MultIntZero radius;    // nonzero

  // v(x - center) < radius, decided exactly.
  bool contains(const FieldElement& x) const;
};

// O_v as a ball: {v(x) <= 1} = B_{of_add(1)}(0).
Ball integer_ball(const FinitePlace& v);

// A basic open of the restricted-product topology: finitely many indexed
// places with an explicit finite union of balls each, O_v everywhere else.
struct BasicOpen {
  NumberField field;
  std::map<FinitePlace, std::vector<Ball>> opens;  // index set I = keys

  PlaceSet index_set() const;
};

// center + pi^m * O_v: a compact (scaled, translated integer ball) subset
// of K_v.
struct ScaledIntegerBall {
  FinitePlace place;
  FieldElement center;
  Int exponent;  // m

  bool contains(const FieldElement& x) const;  // v(x - center) <= of_add(-m)
};

// A compactness certificate: one scaled integer ball in a single completion,
// or a finite product of scaled balls times O_v at every other place.
struct CompactCert {
  enum class Kind { Scaled, Product };

  static CompactCert scaled(ScaledIntegerBall ball);
  static CompactCert product(NumberField field, std::map<FinitePlace, ScaledIntegerBall> blocks);

  Kind kind;
  NumberField field;
  std::map<FinitePlace, ScaledIntegerBall> blocks;  // T = keys; Scaled uses one entry

  const ScaledIntegerBall& single() const;
};

// Centers of finitely many radius-gamma balls covering O_v: just 0 when
// to_add(gamma) >= 1, otherwise representatives of O_v/m_v^n with
// n = 1 - to_add(gamma).
std::vector<FieldElement> cover_integers(const FinitePlace& v, const MultIntZero& gamma);

// Independent brute-force check that the balls B_gamma(t) cover O_v:
// enumerates every class of O_v/m_v^n for n = max(1, 1 - to_add(gamma)).
// Membership at radius gamma only depends on the class mod m_v^n, so the
// finite check is sound and complete. Enumeration capped at 10^6 classes.
bool verify_cover(const FinitePlace& v, const MultIntZero& gamma,
                  const std::vector<FieldElement>& centers);

// The compact neighborhood x + pi^m O_v inside B_gamma(x), with the least
// workable exponent m = 1 - to_add(gamma).
ScaledIntegerBall compact_nbhd_local(const FinitePlace& v, const FieldElement& x,
                                     const MultIntZero& gamma);

bool cert_contains(const ScaledIntegerBall& cert, const FinitePlace& v, const FieldElement& x);
bool cert_contains(const CompactCert& cert, const FiniteAdele& x);

// x_v in some ball of opens[v] for v in I, and integral outside I.
bool basic_open_membership(const FiniteAdele& x, const BasicOpen& U);

// Membership of an S-adele x in the pullback of U, evaluated two ways: via
// the restricted-product route (full basic-open membership), and via the
// product-subspace route (per-place checks on I union S, integrality only on
// S \ I). The two answers must always agree.
std::pair<bool, bool> sadele_membership_two_ways(const PlaceSet& S, const FiniteAdele& x,
                                                 const BasicOpen& U);

// A compact neighborhood of x inside the basic open U: scaled integer balls
// at the indexed places, O_v elsewhere. Requires x in U.
CompactCert adelic_compact_nbhd(const FiniteAdele& x, const BasicOpen& U);

// Exact place-by-place containment of the certificate in U. A scaled ball
// sits inside B_gamma(t) iff v(center - t) < gamma and of_add(-m) < gamma;
// inside O_v iff m >= 0 and the center is integral. Containment in a union
// is certified by containment in one of its balls.
bool verify_cert_subset(const CompactCert& M, const BasicOpen& U);

// Intersection of two balls at one place: the smaller ball when the centers
// are closer than the larger radius, empty otherwise.
std::optional<Ball> ball_intersect(const Ball& b1, const Ball& b2);

// Merged basic open over the union of index sets; membership equals the
// conjunction of the memberships.
BasicOpen basic_open_intersect(const BasicOpen& U, const BasicOpen& V);

// Numeric compact neighborhood at an infinite place: the closed interval or
// disc of the given radius around sigma(x). Tolerance semantics only.
struct InfiniteNbhd {
  bool is_disc;  // false: interval on the real line
  double center_re;
  double center_im;
  double radius;
};

InfiniteNbhd infinite_compact_nbhd(const NumberField& K, const InfinitePlaceData& sigma,
                                   const FieldElement& x, double radius);

}  // namespace adelekit
