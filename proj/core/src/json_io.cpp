#include "adelekit/json_io.hpp"

#include "adelekit/parse.hpp"

namespace adelekit {

namespace {

std::int64_t json_i64(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(Errc::ParseError, std::string("expected integer for ") + what);
  return j.get<std::int64_t>();
}

NumberField field_from_optional_d(const Json& j) {
  if (j.contains("d")) return NumberField::quadratic(Int(json_i64(j["d"], "d")));
  return NumberField::rationals();
}

void emit_optional_d(const NumberField& K, Json& j) {
  if (!K.is_rational()) j["d"] = to_i64(K.quad().d());
}

}  // namespace

Json mult_int_zero_to_json(const MultIntZero& g) {
  if (g.is_zero()) return Json{{"zero", true}};
  return Json{{"exp", to_i64(g.to_add())}};
}

MultIntZero mult_int_zero_from_json(const Json& j) {
  if (j.contains("zero")) {
    if (j["zero"] != true) fail(Errc::ParseError, "\"zero\" must be true");
    return MultIntZero::zero();
  }
  return MultIntZero::of_add(Int(json_i64(j.at("exp"), "exp")));
}

Json prime_ideal_to_json(const PrimeIdeal& P) {
  return Json{{"p", to_i64(P.p)},
              {"e", P.e},
              {"f", P.f},
              {"hnf", Json::array({Json::array({to_i64(P.hnf.h00), 0}),
                                   Json::array({to_i64(P.hnf.h10), to_i64(P.hnf.h11)})})},
              {"gen2", Json{{"a", rat_to_string(P.gen2.a)}, {"b", rat_to_string(P.gen2.b)}}}};
}

Json factorization_to_json(const std::vector<std::pair<PrimeIdeal, int>>& factors) {
  Json arr = Json::array();
  for (const auto& [P, mult] : factors) {
    Json j = prime_ideal_to_json(P);
    j["multiplicity"] = mult;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json local_element_to_json(const LocalElement& x) {
  if (x.is_exact_zero()) return Json{{"zero", true}};
  Json digits = Json::array();
  bool pair = x.place().f() == 2;
  for (const ResidueElement& d : x.digits()) {
    if (pair)
      digits.push_back(Json::array({to_i64(d.a), to_i64(d.b)}));
    else
      digits.push_back(to_i64(d.a));
  }
  return Json{{"val", x.has_known_digits() ? Json(x.val()) : Json(nullptr)},
              {"digits", std::move(digits)},
              {"prec", x.prec()}};
}

Json finite_adele_to_json(const FiniteAdele& x) {
  Json corr = Json::object();
  for (const auto& [v, c] : x.corrections()) corr[v.spec_string()] = fe_to_string(c);
  Json j{{"global", fe_to_string(x.global())}, {"corrections", std::move(corr)}};
  emit_optional_d(x.field(), j);
  return j;
}

FiniteAdele finite_adele_from_json(const Json& j) {
  NumberField K = field_from_optional_d(j);
  FieldElement global = parse_element(j.at("global").get<std::string>());
  std::map<FinitePlace, FieldElement> corrections;
  if (j.contains("corrections")) {
    for (const auto& [key, value] : j["corrections"].items()) {
      FinitePlace v = parse_finite_place(key);
      if (!(v.field() == K)) fail(Errc::FieldMismatch, "correction key " + key + " has wrong field");
      corrections.emplace(std::move(v), parse_element(value.get<std::string>()));
    }
  }
  return FiniteAdele(K, std::move(global), std::move(corrections));
}

Json ball_to_json(const Ball& b) {
  return Json{{"center", fe_to_string(b.center)}, {"gamma", to_i64(b.radius.to_add())}};
}

Ball ball_from_json(const FinitePlace& v, const Json& j) {
  return Ball{v, parse_element(j.at("center").get<std::string>()),
              MultIntZero::of_add(Int(json_i64(j.at("gamma"), "gamma")))};
}

Json basic_open_to_json(const BasicOpen& U) {
  Json opens = Json::object();
  for (const auto& [v, balls] : U.opens) {
    Json arr = Json::array();
    for (const Ball& b : balls) arr.push_back(ball_to_json(b));
    opens[v.spec_string()] = std::move(arr);
  }
  Json j{{"opens", std::move(opens)}};
  emit_optional_d(U.field, j);
  return j;
}

BasicOpen basic_open_from_json(const Json& j) {
  BasicOpen U{field_from_optional_d(j), {}};
  for (const auto& [key, value] : j.at("opens").items()) {
    FinitePlace v = parse_finite_place(key);
    if (!(v.field() == U.field)) fail(Errc::FieldMismatch, "open key " + key + " has wrong field");
    std::vector<Ball> balls;
    for (const Json& bj : value) balls.push_back(ball_from_json(v, bj));
    U.opens.emplace(std::move(v), std::move(balls));
  }
  return U;
}

Json compact_cert_to_json(const CompactCert& cert) {
  if (cert.kind == CompactCert::Kind::Scaled) {
    const ScaledIntegerBall& b = cert.single();
    return Json{{"kind", "scaled"},
                {"place", b.place.spec_string()},
                {"center", fe_to_string(b.center)},
                {"m", to_i64(b.exponent)}};
  }
  Json T = Json::array();
  Json blocks = Json::object();
  for (const auto& [v, b] : cert.blocks) {
    T.push_back(v.spec_string());
    blocks[v.spec_string()] =
        Json{{"center", fe_to_string(b.center)}, {"m", to_i64(b.exponent)}};
  }
  Json j{{"kind", "product"}, {"T", std::move(T)}, {"blocks", std::move(blocks)}};
  emit_optional_d(cert.field, j);
  return j;
}

CompactCert compact_cert_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "scaled") {
    FinitePlace v = parse_finite_place(j.at("place").get<std::string>());
    return CompactCert::scaled(ScaledIntegerBall{
        v, parse_element(j.at("center").get<std::string>()), Int(json_i64(j.at("m"), "m"))});
  }
  if (kind != "product") fail(Errc::ParseError, "unknown certificate kind '" + kind + "'");
  NumberField K = field_from_optional_d(j);
  std::map<FinitePlace, ScaledIntegerBall> blocks;
  for (const auto& [key, value] : j.at("blocks").items()) {
    FinitePlace v = parse_finite_place(key);
    blocks.emplace(v, ScaledIntegerBall{v, parse_element(value.at("center").get<std::string>()),
                                        Int(json_i64(value.at("m"), "m"))});
  }
  return CompactCert::product(std::move(K), std::move(blocks));
}

Json place_set_to_json(const PlaceSet& S) {
  Json arr = Json::array();
  for (const FinitePlace& v : S) arr.push_back(v.spec_string());
  return arr;
}

Json domain_error_to_json(const DomainError& e) {
  return Json{{"error", errc_name(e.code())}, {"message", e.what()}};
}

}  // namespace adelekit
