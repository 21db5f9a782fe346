#pragma once

// Finite adeles as "diagonal plus finitely many corrections": the component
// at a place v is global + corrections[v] (a missing key meaning zero), with
// both parts exact field elements. Every element of this subring is integral
// away from the finitely many candidate places given by the denominator of
// the global part and the correction keys, so the restricted-product
// condition holds by construction and support is exactly decidable.
//
// General restricted-product elements carry infinitely many independent
// coordinates and are not finitely representable; this subring is closed
// under the ring operations, contains the diagonal and everything with
// finite support, and is dense enough to exercise each construction built
// on top. Model restriction, stated here once.

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "adelekit/completion.hpp"

namespace adelekit {

using PlaceSet = std::set<FinitePlace>;

class FiniteAdele {
 public:
  explicit FiniteAdele(NumberField field) : field_(std::move(field)), global_() {}
  FiniteAdele(NumberField field, FieldElement global,
              std::map<FinitePlace, FieldElement> corrections = {});

  const NumberField& field() const { return field_; }
  const FieldElement& global() const { return global_; }
  const std::map<FinitePlace, FieldElement>& corrections() const { return corrections_; }

  // global + corrections[v], the exact value of the component at v.
  FieldElement component_element(const FinitePlace& v) const;

  bool operator==(const FiniteAdele& o) const {
    return field_ == o.field_ && global_ == o.global_ && corrections_ == o.corrections_;
  }

 private:
  void canonicalize();  // drop zero corrections

  NumberField field_;
  FieldElement global_;
  std::map<FinitePlace, FieldElement> corrections_;
};

struct InfiniteAdele {
  NumberField field;
  // Indexed by infinite_places(field) in canonical order.
  std::vector<std::complex<double>> components;
};

struct Adele {
  InfiniteAdele infinite;
  FiniteAdele finite;
};

// x at every place: corrections empty, infinite components sigma(x).
Adele diagonal_embed(const NumberField& K, const FieldElement& x);
FiniteAdele finite_diagonal(const NumberField& K, const FieldElement& x);

enum class AdeleOp { Add, Mul, Neg };

FiniteAdele adele_arith(AdeleOp op, const FiniteAdele& x, const FiniteAdele* y = nullptr);

// The component at v as a local expansion with absolute precision N.
LocalElement adele_component(const FiniteAdele& x, const FinitePlace& v, std::int64_t N);

// The minimal set S_x of places where x fails to be integral, exact.
PlaceSet support(const FiniteAdele& x);

// support(x) within S?
bool is_finite_s_adele(const PlaceSet& S, const FiniteAdele& x);

struct SAdeleSplit {
  // Exact per-place components on S.
  std::map<FinitePlace, FieldElement> on_s;
  // Remainder: same global, corrections restricted off S.
  FiniteAdele off_s;
};

// Separates the S-indexed components from the rest; requires support(x) in S.
SAdeleSplit sadele_split(const PlaceSet& S, const FiniteAdele& x);
// Two-sided inverse of sadele_split on canonical forms.
FiniteAdele sadele_unsplit(const PlaceSet& S, const SAdeleSplit& parts);

}  // namespace adelekit
