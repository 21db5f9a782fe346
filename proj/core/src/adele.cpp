#include "adelekit/adele.hpp"

namespace adelekit {

FiniteAdele::FiniteAdele(NumberField field, FieldElement global,
                         std::map<FinitePlace, FieldElement> corrections)
    : field_(std::move(field)), global_(std::move(global)),
      corrections_(std::move(corrections)) {
  for (const auto& [v, c] : corrections_)
    if (!(v.field() == field_))
      fail(Errc::FieldMismatch, "correction at a place of a different field");
  canonicalize();
}

void FiniteAdele::canonicalize() {
  for (auto it = corrections_.begin(); it != corrections_.end();)
    it = it->second.is_zero() ? corrections_.erase(it) : std::next(it);
}

FieldElement FiniteAdele::component_element(const FinitePlace& v) const {
  auto it = corrections_.find(v);
  return it == corrections_.end() ? global_ : fe_add(global_, it->second);
}

FiniteAdele finite_diagonal(const NumberField& K, const FieldElement& x) {
  return FiniteAdele(K, x);
}

Adele diagonal_embed(const NumberField& K, const FieldElement& x) {
  InfiniteAdele inf{K, {}};
  for (const InfinitePlaceData& sigma : infinite_places(K))
    inf.components.push_back(infinite_embed(K, sigma, x));
  return {std::move(inf), finite_diagonal(K, x)};
}

FiniteAdele adele_arith(AdeleOp op, const FiniteAdele& x, const FiniteAdele* y) {
  const NumberField& K = x.field();
  if (op == AdeleOp::Neg)
    return FiniteAdele(K, fe_neg(x.global()), [&] {
      std::map<FinitePlace, FieldElement> c;
      for (const auto& [v, cx] : x.corrections()) c.emplace(v, fe_neg(cx));
      return c;
    }());

  if (y == nullptr) fail(Errc::FieldMismatch, "binary operation needs two operands");
  if (!(K == y->field())) fail(Errc::FieldMismatch, "adeles over different fields");

  std::set<FinitePlace> keys;
  for (const auto& [v, c] : x.corrections()) keys.insert(v);
  for (const auto& [v, c] : y->corrections()) keys.insert(v);

  auto corr = [](const FiniteAdele& a, const FinitePlace& v) {
    auto it = a.corrections().find(v);
    return it == a.corrections().end() ? FieldElement() : it->second;
  };

  std::map<FinitePlace, FieldElement> c;
  if (op == AdeleOp::Add) {
    for (const FinitePlace& v : keys) c.emplace(v, fe_add(corr(x, v), corr(*y, v)));
    return FiniteAdele(K, fe_add(x.global(), y->global()), std::move(c));
  }
  // mul: componentwise (g_x + c_x)(g_y + c_y) minus the new global g_x*g_y.
  for (const FinitePlace& v : keys) {
    FieldElement cx = corr(x, v), cy = corr(*y, v);
    FieldElement t = fe_add(fe_add(fe_mul(K, x.global(), cy), fe_mul(K, y->global(), cx)),
                            fe_mul(K, cx, cy));
    c.emplace(v, t);
  }
  return FiniteAdele(K, fe_mul(K, x.global(), y->global()), std::move(c));
}

LocalElement adele_component(const FiniteAdele& x, const FinitePlace& v, std::int64_t N) {
  if (!(v.field() == x.field())) fail(Errc::FieldMismatch, "component at a foreign place");
  return local_embed(v, x.component_element(v), N);
}

PlaceSet support(const FiniteAdele& x) {
  PlaceSet candidates;
  for (const FinitePlace& v : denominator_places(x.field(), x.global())) candidates.insert(v);
  for (const auto& [v, c] : x.corrections()) candidates.insert(v);

  PlaceSet out;
  for (const FinitePlace& v : candidates)
    if (!v.is_integral(x.component_element(v))) out.insert(v);
  return out;
}

bool is_finite_s_adele(const PlaceSet& S, const FiniteAdele& x) {
  for (const FinitePlace& v : support(x))
    if (!S.count(v)) return false;
  return true;
}

SAdeleSplit sadele_split(const PlaceSet& S, const FiniteAdele& x) {
  if (!is_finite_s_adele(S, x))
    fail(Errc::NotSAdele, "support is not contained in S");
  SAdeleSplit parts{{}, FiniteAdele(x.field())};
  std::map<FinitePlace, FieldElement> off;
  for (const auto& [v, c] : x.corrections())
    if (!S.count(v)) off.emplace(v, c);
  for (const FinitePlace& v : S) parts.on_s.emplace(v, x.component_element(v));
  parts.off_s = FiniteAdele(x.field(), x.global(), std::move(off));
  return parts;
}

FiniteAdele sadele_unsplit(const PlaceSet& S, const SAdeleSplit& parts) {
  std::map<FinitePlace, FieldElement> corr = parts.off_s.corrections();
  for (const auto& [v, comp] : parts.on_s) {
    if (!S.count(v)) fail(Errc::NotSAdele, "component at a place outside S");
    FieldElement c = fe_sub(comp, parts.off_s.global());
    if (!c.is_zero()) corr.emplace(v, c);
  }
  return FiniteAdele(parts.off_s.field(), parts.off_s.global(), std::move(corr));
}

}  // namespace adelekit
