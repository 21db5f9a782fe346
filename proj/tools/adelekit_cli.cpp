// adelekit: exact valuations, prime-ideal factorization, local expansions,
// finite adeles, and compactness certificates from one binary. All numeric
// I/O is exact except where a command is explicitly documented as floating.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "adelekit/json_io.hpp"
#include "adelekit/parse.hpp"
#include "adelekit/suite.hpp"

namespace {

using namespace adelekit;

constexpr const char* kGrammarHelp =
    "Literals:\n"
    "  rational := ['+'|'-'] digits ['/' digits]            e.g. -7/2\n"
    "  element  := rational [('+'|'-') rational 'w']        e.g. 1/2+1/3 w\n"
    "            | rational 'w'                             (w = sqrt(d) or (1+sqrt(d))/2)\n"
    "  place    := 'p:' prime                               place of Q\n"
    "            | 'd:' int ',p:' prime [',i:' index]       factor i of p in Q(sqrt d)\n"
    "            | 'inf'                                    archimedean place (val only)\n"
    "\n"
    "Finite-place output is exact. Archimedean output (nbhd --infinite) is\n"
    "floating point with relative error <= 1e-12 for coordinates up to 1e6.\n";

int default_precision() {
  if (const char* env = std::getenv("ADELEKIT_PRECISION_DEFAULT")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<int>(value);
  }
  return 8;
}

void emit(const Json& j, bool text, const std::string& text_rendering = "") {
  if (text && !text_rendering.empty())
    std::cout << text_rendering << "\n";
  else
    std::cout << j.dump() << "\n";
}

struct ValArgs {
  std::string place;
  std::string x;
  std::string mode = "all";
};

int run_val(const ValArgs& args, bool text) {
  Rat x = parse_rational(args.x);
  Json out;
  out["place"] = args.place;
  if (args.place == "inf") {
    if (args.mode != "all" && args.mode != "abs")
      fail(Errc::KindPlaceMismatch, "only --mode abs makes sense at the infinite place");
    out["abs"] = rat_to_frac_string(archimedean_abs(x));
  } else {
    PlaceSpec spec = parse_place_spec(args.place);
    if (!spec.rational) fail(Errc::BadPlace, "val works over Q; use expand for quadratic places");
    require_prime(spec.p);
    if (args.mode == "all" || args.mode == "additive") {
      AdditiveValue a = padic_additive(spec.p, x);
      out["additive"] = a.is_infinity() ? Json("inf") : Json(to_i64(a.value()));
    }
    if (args.mode == "all" || args.mode == "mult")
      out["mult"] = mult_int_zero_to_json(padic_mult(spec.p, x));
    if (args.mode == "all" || args.mode == "abs")
      out["abs"] = rat_to_frac_string(abs_from_valuation(spec.p, Rat(spec.p), x));
  }
  std::string line = "place " + args.place + ": ";
  for (auto it = out.begin(); it != out.end(); ++it)
    if (it.key() != "place") line += it.key() + "=" + it.value().dump() + " ";
  emit(out, text, line);
  return 0;
}

int run_factor(long d, long p, bool text) {
  QuadraticField K = make_field(Int(d));
  auto factors = factor_rational_prime(K, Int(p));
  Json out = factorization_to_json(factors);
  std::string line;
  for (const auto& [P, mult] : factors)
    line += "(" + P.p.get_str() + ", " + fe_to_string(P.gen2) + ") e=" + std::to_string(P.e) +
            " f=" + std::to_string(P.f) + " x" + std::to_string(mult) + "  ";
  emit(out, text, line);
  return 0;
}

int run_expand(const std::string& place, const std::string& x, int prec, bool text) {
  FinitePlace v = parse_finite_place(place);
  LocalElement e = local_embed(v, parse_element(x), prec);
  emit(local_element_to_json(e), text, e.to_string());
  return 0;
}

int run_cover(const std::string& place, long gamma, bool text) {
  FinitePlace v = parse_finite_place(place);
  MultIntZero g = MultIntZero::of_add(gamma);
  auto centers = cover_integers(v, g);
  bool ok = verify_cover(v, g, centers);
  Json list = Json::array();
  for (const FieldElement& c : centers) list.push_back(fe_to_string(c));
  Json out{{"place", v.spec_string()},
           {"gamma", gamma},
           {"centers", std::move(list)},
           {"count", centers.size()},
           {"verified", ok}};
  emit(out, text,
       v.spec_string() + " gamma=" + std::to_string(gamma) + ": " +
           std::to_string(centers.size()) + " centers, verified=" + (ok ? "true" : "false"));
  return 0;
}

struct NbhdArgs {
  std::string place, x, adele, open, d;
  long gamma = 0;
  bool gamma_set = false;
  bool infinite = false;
  double radius = 1.0;
};

int run_nbhd(const NbhdArgs& args, bool text) {
  if (args.infinite) {
    NumberField K = args.d.empty() ? NumberField::rationals()
                                   : NumberField::quadratic(Int(args.d));
    FieldElement x = parse_element(args.x);
    Json out = Json::array();
    auto places = infinite_places(K);
    for (std::size_t i = 0; i < places.size(); ++i) {
      InfiniteNbhd nb = infinite_compact_nbhd(K, places[i], x, args.radius);
      out.push_back(Json{{"kind", nb.is_disc ? "disc" : "interval"},
                         {"center", Json::array({nb.center_re, nb.center_im})},
                         {"radius", nb.radius}});
    }
    emit(out, text, out.dump());
    return 0;
  }
  if (!args.adele.empty()) {
    FiniteAdele x = finite_adele_from_json(Json::parse(args.adele));
    BasicOpen U = basic_open_from_json(Json::parse(args.open));
    CompactCert M = adelic_compact_nbhd(x, U);
    Json out{{"cert", compact_cert_to_json(M)},
             {"contains_x", cert_contains(M, x)},
             {"subset_of_open", verify_cert_subset(M, U)}};
    emit(out, text, out.dump());
    return 0;
  }
  if (!args.gamma_set) fail(Errc::ParseError, "nbhd needs --gamma in local mode");
  FinitePlace v = parse_finite_place(args.place);
  FieldElement x = parse_element(args.x);
  MultIntZero g = MultIntZero::of_add(args.gamma);
  ScaledIntegerBall cert = compact_nbhd_local(v, x, g);
  BasicOpen ball_open{v.field(), {{v, {Ball{v, x, g}}}}};
  Json out{{"cert", compact_cert_to_json(CompactCert::scaled(cert))},
           {"contains_x", cert_contains(cert, v, x)},
           {"subset_of_ball", verify_cert_subset(CompactCert::scaled(cert), ball_open)}};
  emit(out, text, out.dump());
  return 0;
}

struct AdeleArgs {
  std::string x, y, place;
  int prec = 8;
};

int run_adele(const std::string& verb, const AdeleArgs& args, bool text) {
  FiniteAdele x = finite_adele_from_json(Json::parse(args.x));
  if (verb == "add" || verb == "mul") {
    FiniteAdele y = finite_adele_from_json(Json::parse(args.y));
    FiniteAdele z = adele_arith(verb == "add" ? AdeleOp::Add : AdeleOp::Mul, x, &y);
    emit(finite_adele_to_json(z), text, finite_adele_to_json(z).dump());
    return 0;
  }
  if (verb == "support") {
    Json out{{"support", place_set_to_json(support(x))}};
    emit(out, text, out.dump());
    return 0;
  }
  // component
  FinitePlace v = parse_finite_place(args.place);
  LocalElement c = adele_component(x, v, args.prec);
  emit(local_element_to_json(c), text, c.to_string());
  return 0;
}

int run_check(std::uint64_t seed, long long samples, int criterion, bool text) {
  SuiteOptions options;
  options.seed = seed;
  if (samples > 0) options.samples = samples;
  std::vector<CriterionResult> results;
  if (criterion > 0)
    results.push_back(run_criterion(criterion, options));
  else
    results = run_all_criteria(options);

  bool all_passed = true;
  Json arr = Json::array();
  for (const CriterionResult& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << format_result_line(r) << "\n";
    arr.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"seconds", r.seconds}});
  }
  if (!text) std::cout << Json{{"results", arr}, {"passed", all_passed}}.dump() << "\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adelekit: exact valuations, completions and adelic certificates"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string output_mode = "json";
  app.add_option("--output", output_mode, "Output mode: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  ValArgs val_args;
  auto* val = app.add_subcommand("val", "Valuations and absolute values of a rational");
  val->add_option("--place", val_args.place, "p:<prime> or inf")->required();
  val->add_option("--x", val_args.x, "rational literal")->required();
  val->add_option("--mode", val_args.mode, "additive | mult | abs | all")
      ->check(CLI::IsMember({"additive", "mult", "abs", "all"}));

  long factor_d = 0, factor_p = 0;
  auto* factor = app.add_subcommand("factor", "Factor a rational prime in Q(sqrt d)");
  factor->add_option("--d", factor_d, "squarefree d of the field")->required();
  factor->add_option("--p", factor_p, "rational prime")->required();

  std::string expand_place, expand_x;
  int expand_prec = default_precision();
  auto* expand = app.add_subcommand("expand", "Digit expansion of an element in K_v");
  expand->add_option("--place", expand_place, "finite place spec")->required();
  expand->add_option("--x", expand_x, "element literal")->required();
  expand->add_option("--prec", expand_prec,
                     "absolute precision (default ADELEKIT_PRECISION_DEFAULT or 8)");

  AdeleArgs adele_args;
  adele_args.prec = default_precision();
  std::string adele_verb;
  auto* adele = app.add_subcommand("adele", "Finite adele arithmetic and queries");
  adele->add_option("verb", adele_verb, "add | mul | support | component")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "support", "component"}));
  adele->add_option("--x", adele_args.x, "adele JSON")->required();
  adele->add_option("--y", adele_args.y, "second adele JSON (add/mul)");
  adele->add_option("--place", adele_args.place, "place spec (component)");
  adele->add_option("--prec", adele_args.prec, "precision (component)");

  std::string cover_place;
  long cover_gamma = 0;
  auto* cover = app.add_subcommand("cover", "Finite ball cover of O_v with verification");
  cover->add_option("--place", cover_place, "finite place spec")->required();
  cover->add_option("--gamma", cover_gamma, "to_add of the ball radius")->required();

  NbhdArgs nbhd_args;
  auto* nbhd = app.add_subcommand("nbhd", "Compact neighborhood certificates");
  nbhd->add_option("--place", nbhd_args.place, "finite place spec (local mode)");
  nbhd->add_option("--x", nbhd_args.x, "element literal");
  auto* gamma_opt = nbhd->add_option("--gamma", nbhd_args.gamma, "to_add of the ball radius");
  nbhd->add_option("--adele", nbhd_args.adele, "adele JSON (adelic mode)");
  nbhd->add_option("--open", nbhd_args.open, "basic open JSON (adelic mode)");
  nbhd->add_flag("--infinite", nbhd_args.infinite, "numeric neighborhoods at infinite places");
  nbhd->add_option("--d", nbhd_args.d, "field for --infinite (omit for Q)");
  nbhd->add_option("--radius", nbhd_args.radius, "radius for --infinite");

  std::uint64_t check_seed = 0;
  long long check_samples = 0;
  int check_criterion = 0;
  auto* check = app.add_subcommand("check", "Run the full verification suite");
  check->add_option("--seed", check_seed, "seed for the randomized suites (default 0)");
  check->add_option("--samples", check_samples, "override per-suite sample counts");
  check->add_option("--criterion", check_criterion, "run a single criterion (1-12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool text = output_mode == "text";
  try {
    nbhd_args.gamma_set = gamma_opt->count() > 0;
    if (val->parsed()) return run_val(val_args, text);
    if (factor->parsed()) return run_factor(factor_d, factor_p, text);
    if (expand->parsed()) return run_expand(expand_place, expand_x, expand_prec, text);
    if (adele->parsed()) return run_adele(adele_verb, adele_args, text);
    if (cover->parsed()) return run_cover(cover_place, cover_gamma, text);
    if (nbhd->parsed()) return run_nbhd(nbhd_args, text);
    if (check->parsed()) return run_check(check_seed, check_samples, check_criterion, text);
  } catch (const DomainError& e) {
    std::cerr << domain_error_to_json(e).dump() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const Json::exception& e) {
    std::cerr << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
