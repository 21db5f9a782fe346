#include "adelekit/suite.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "adelekit/rng.hpp"
#include "adelekit/topology.hpp"

namespace adelekit {

namespace {

// ---------------------------------------------------------------------------
// Shared harness machinery.

struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed * 0x100000001b3ULL + salt + 0xcbf29ce484222325ULL;
}

const std::vector<long> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Kronecker symbol (a | p): the classification oracle, kept independent of
// the root-finding in factor_rational_prime. Euler's criterion at odd p, the
// mod-8 character at 2.
int kronecker_symbol(const Int& a, const Int& p) {
  if (p == 2) {
    if (mpz_even_p(a.get_mpz_t())) return 0;
    Int r = mod_floor(a, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  Int r = mod_floor(a, p);
  if (r == 0) return 0;
  Int e;
  mpz_powm(e.get_mpz_t(), r.get_mpz_t(), Int((p - 1) / 2).get_mpz_t(), p.get_mpz_t());
  return e == 1 ? 1 : -1;
}

// The C1/C2 sample stream: both criteria must see the same rationals.
Rat sample_rational(Rng& rng) {
  Rat q = rng.rational(1000000, 1000000);
  return q;
}

std::vector<FinitePlace> mixed_place_pool() {
  NumberField Qi = NumberField::quadratic(-1);
  NumberField Q5 = NumberField::quadratic(5);
  std::vector<FinitePlace> pool;
  for (long p : {2L, 3L, 5L, 7L}) pool.push_back(FinitePlace::of_rational(Int(p)));
  for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(13)})
    for (const FinitePlace& v : places_over(Qi, p)) pool.push_back(v);
  for (const Int& p : {Int(2), Int(5), Int(11)})
    for (const FinitePlace& v : places_over(Q5, p)) pool.push_back(v);
  return pool;
}

std::vector<FinitePlace> field_place_pool(const NumberField& K) {
  std::vector<FinitePlace> pool;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    for (const FinitePlace& v : places_over(K, Int(p))) pool.push_back(v);
  return pool;
}

FieldElement random_element(Rng& rng, const NumberField& K, std::int64_t max_num,
                            std::int64_t max_den) {
  if (K.is_rational()) return FieldElement(rng.rational(max_num, max_den));
  return FieldElement{rng.rational(max_num, max_den), rng.rational(max_num, max_den)};
}

FieldElement random_nonzero_element(Rng& rng, const NumberField& K, std::int64_t max_num,
                                    std::int64_t max_den) {
  FieldElement x = random_element(rng, K, max_num, max_den);
  while (x.is_zero()) x = random_element(rng, K, max_num, max_den);
  return x;
}

// A random adele over K: random global plus corrections at a few pool places.
FiniteAdele random_adele(Rng& rng, const NumberField& K,
                         const std::vector<FinitePlace>& pool) {
  FieldElement global = random_element(rng, K, 40, 12);
  std::map<FinitePlace, FieldElement> corrections;
  int extra = static_cast<int>(rng.range(0, 3));
  for (int i = 0; i < extra; ++i) {
    const FinitePlace& v = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    corrections[v] = random_element(rng, K, 20, 25);
  }
  return FiniteAdele(K, std::move(global), std::move(corrections));
}

std::string describe_pair(const Rat& x, const Rat& y) {
  return "(x=" + rat_to_string(x) + ", y=" + rat_to_string(y) + ")";
}

// ---------------------------------------------------------------------------
// Criteria.

void criterion_valuation_axioms(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(10000);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(p)));
    RationalPlace finite = RationalPlace::finite(Int(p));
    RationalPlace inf = RationalPlace::infinity();
    std::vector<std::pair<Rat, Rat>> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
      samples.emplace_back(sample_rational(rng), sample_rational(rng));

    auto absorb = [&](const ValuationReport& report, const std::string& where) {
      tally.checks += static_cast<long long>(report.sample_count) - 1;
      tally.check(report.passed(),
                  report.axiom_id + " at " + where +
                      (report.failures.empty()
                           ? ""
                           : " " + describe_pair(report.failures[0].x, report.failures[0].y)));
      tally.failures += static_cast<long long>(report.failures.size()) -
                        (report.passed() ? 0 : 1);
    };
    for (AxiomKind kind :
         {AxiomKind::AbsoluteValue, AxiomKind::AdditiveValuation, AxiomKind::MultValuation})
      absorb(axiom_check(kind, finite, samples), "p=" + std::to_string(p));
    absorb(axiom_check(AxiomKind::AbsoluteValue, inf, samples), "infinity");
  }
}

void criterion_bridge_identity(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(10000);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(p)));
    Int P(p);
    for (long long i = 0; i < 2 * n; ++i) {  // both halves of the C1 pairs
      Rat x = sample_rational(rng);
      Rat lhs = abs_from_valuation(P, Rat(P), x);
      MultIntZero v = padic_mult(P, x);
      Rat rhs = v.is_zero() ? Rat(0) : rat_pow(Rat(P), to_i64(v.to_add()));
      tally.check(lhs == rhs, "bridge identity at p=" + std::to_string(p) + " x=" +
                                  rat_to_string(x));
    }
  }
}

void criterion_splitting_table(const SuiteOptions&, Tally& tally) {
  for (long dv : {-1L, -3L, 2L, 5L}) {
    QuadraticField K = make_field(Int(dv));
    for (long pv : kSmallPrimes) {
      Int p(pv);
      auto factors = factor_rational_prime(K, p);

      int sum_ef = 0;
      Hnf2 prod = Hnf2::identity();
      for (const auto& [P, e] : factors) {
        sum_ef += P.e * P.f;
        prod = hnf_mul(K, prod, hnf_pow(K, P.hnf, static_cast<std::uint64_t>(e)));
      }
      std::string where = "d=" + std::to_string(dv) + " p=" + std::to_string(pv);
      tally.check(sum_ef == 2, "sum e*f at " + where);
      tally.check(prod == Hnf2::principal_integer(p), "HNF product at " + where);

      std::string classified = factors.size() == 2     ? "split"
                               : factors[0].first.e == 2 ? "ramified"
                                                          : "inert";
      int symbol = kronecker_symbol(K.discriminant(), p);
      std::string expected = symbol == 0 ? "ramified" : (symbol == 1 ? "split" : "inert");
      tally.check(classified == expected,
                  "classification at " + where + ": got " + classified + ", oracle says " +
                      expected);
    }
  }
}

void criterion_norm_valuation(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(1000);
  for (long dv : {-1L, -3L, 2L, 5L}) {
    NumberField K = NumberField::quadratic(Int(dv));
    Rng rng(mix_seed(opt.seed, 0x40 + static_cast<std::uint64_t>(dv + 16)));
    for (long long i = 0; i < n; ++i) {
      Int p(kSmallPrimes[static_cast<std::size_t>(rng.range(0, 9))]);
      FieldElement x{Rat(Int(static_cast<long>(rng.range(-30, 30)))),
                     Rat(Int(static_cast<long>(rng.range(-30, 30))))};
      if (x.is_zero()) x.a = 1;
      // Push some samples to higher valuations.
      std::int64_t k = rng.range(0, 4);
      if (k > 2) x = fe_scale(rat_pow(Rat(p), k - 2), x);

      Rat nrm = fe_norm(K, x);
      AdditiveValue lhs = padic_additive(p, nrm);
      Int rhs = 0;
      for (const FinitePlace& v : places_over(K, p))
        rhs += Int(v.f()) * v.additive_valuation(x).value();
      tally.check(!lhs.is_infinity() && lhs.value() == rhs,
                  "norm compatibility at d=" + std::to_string(dv) + " p=" + p.get_str() +
                      " x=" + fe_to_string(x));
    }
  }
}

void criterion_cover_suite(const SuiteOptions&, Tally& tally) {
  std::vector<FinitePlace> places;
  for (long p : {2L, 3L, 5L}) places.push_back(FinitePlace::of_rational(Int(p)));
  places.push_back(FinitePlace::over(NumberField::quadratic(-1), 3));  // inert, q = 9

  for (const FinitePlace& v : places) {
    for (std::int64_t g = -3; g <= 2; ++g) {
      MultIntZero gamma = MultIntZero::of_add(g);
      auto centers = cover_integers(v, gamma);
      std::string where = v.spec_string() + " toAdd(gamma)=" + std::to_string(g);
      tally.check(verify_cover(v, gamma, centers), "cover verification at " + where);
      Int expected = g >= 1 ? Int(1) : int_pow(v.q(), static_cast<std::uint64_t>(1 - g));
      tally.check(Int(static_cast<long>(centers.size())) == expected, "cover size at " + where);
    }
  }
}

void criterion_digit_injectivity(const SuiteOptions&, Tally& tally) {
  struct Case {
    FinitePlace v;
    std::uint64_t max_n;
  };
  std::vector<Case> cases = {{FinitePlace::of_rational(2), 4},
                             {FinitePlace::of_rational(3), 3},
                             {FinitePlace::over(NumberField::quadratic(-1), 3), 2}};
  for (const auto& [v, max_n] : cases) {
    LocalElement pi = uniformizer(v);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      auto reps = quotient_representatives(v, n);
      std::set<std::string> images;
      for (const LocalElement& rep : reps) {
        std::ostringstream key;
        for (const ResidueElement& r : to_finite_coeffs(rep, n, pi))
          key << r.a.get_str() << "." << r.b.get_str() << "|";
        images.insert(key.str());
      }
      Int q_n = int_pow(v.q(), n);
      std::string where = v.spec_string() + " n=" + std::to_string(n);
      tally.check(Int(static_cast<long>(reps.size())) == q_n, "class count at " + where);
      tally.check(images.size() == reps.size(), "digit-map injectivity at " + where);
    }
  }
}

void criterion_local_certificates(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(100);
  auto pool = mixed_place_pool();
  Rng rng(mix_seed(opt.seed, 7));
  for (long long i = 0; i < n; ++i) {
    const FinitePlace& v = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    FieldElement x = random_nonzero_element(rng, v.field(), 60, 18);
    MultIntZero gamma = MultIntZero::of_add(Int(static_cast<long>(rng.range(-5, 5))));

    ScaledIntegerBall cert = compact_nbhd_local(v, x, gamma);
    std::string where = v.spec_string() + " x=" + fe_to_string(x) + " gamma=" +
                        gamma.to_string();
    tally.check(cert_contains(cert, v, x), "certificate contains x at " + where);
    BasicOpen U{v.field(), {{v, {Ball{v, x, gamma}}}}};
    tally.check(verify_cert_subset(CompactCert::scaled(cert), U),
                "certificate inside the ball at " + where);
  }
}

BasicOpen random_basic_open(Rng& rng, const NumberField& K,
                            const std::vector<FinitePlace>& pool, const FiniteAdele& x,
                            bool ensure_contains) {
  BasicOpen U{K, {}};
  PlaceSet idx;
  if (ensure_contains)
    for (const FinitePlace& v : support(x)) idx.insert(v);
  int extra = static_cast<int>(rng.range(ensure_contains ? 1 : 0, 3));
  for (int i = 0; i < extra; ++i)
    idx.insert(pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]);

  for (const FinitePlace& v : idx) {
    std::vector<Ball> balls;
    int count = static_cast<int>(rng.range(1, 2));
    for (int b = 0; b < count; ++b) {
      bool centered = ensure_contains ? (b == 0 || rng.chance(1, 2)) : rng.chance(1, 2);
      if (centered) {
        std::int64_t j = rng.range(0, 3);
        std::int64_t g = rng.range(1 - j, 3 - j + 3);
        FieldElement center = x.component_element(v);
        if (j > 0)
          center = fe_add(center, fe_pow(K, v.uniformizer_element(), j));
        balls.push_back(Ball{v, center, MultIntZero::of_add(Int(g))});
      } else {
        balls.push_back(Ball{v, random_element(rng, K, 8, 6),
                             MultIntZero::of_add(Int(static_cast<long>(rng.range(-3, 4))))});
      }
    }
    U.opens.emplace(v, std::move(balls));
  }
  return U;
}

void criterion_topology_equality(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(500);
  for (int which = 0; which < 2; ++which) {
    NumberField K = which == 0 ? NumberField::rationals() : NumberField::quadratic(-1);
    auto pool = field_place_pool(K);
    Rng rng(mix_seed(opt.seed, 0x80 + static_cast<std::uint64_t>(which)));
    for (long long i = 0; i < n / 2; ++i) {
      FiniteAdele x = random_adele(rng, K, pool);
      PlaceSet S = support(x);
      int extra = static_cast<int>(rng.range(0, 2));
      for (int j = 0; j < extra; ++j)
        S.insert(pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]);
      BasicOpen U = random_basic_open(rng, K, pool, x, false);
      auto [via_restricted, via_product] = sadele_membership_two_ways(S, x, U);
      tally.check(via_restricted == via_product,
                  "route disagreement over " + K.to_string() + " at sample " +
                      std::to_string(i));
    }
  }
}

void criterion_adelic_certificates(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(100);
  for (int which = 0; which < 2; ++which) {
    NumberField K = which == 0 ? NumberField::rationals() : NumberField::quadratic(-1);
    auto pool = field_place_pool(K);
    Rng rng(mix_seed(opt.seed, 0x90 + static_cast<std::uint64_t>(which)));
    for (long long i = 0; i < n / 2; ++i) {
      FiniteAdele x = random_adele(rng, K, pool);
      BasicOpen U = random_basic_open(rng, K, pool, x, true);
      if (!basic_open_membership(x, U)) {
        // Random second balls may push x out; rebuild with centered balls only.
        U.opens.clear();
        for (const FinitePlace& v : support(x))
          U.opens.emplace(v, std::vector<Ball>{Ball{v, x.component_element(v),
                                                    MultIntZero::of_add(2)}});
        if (U.opens.empty()) {
          const FinitePlace& v = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
          U.opens.emplace(v, std::vector<Ball>{Ball{v, x.component_element(v),
                                                    MultIntZero::of_add(2)}});
        }
      }
      CompactCert M = adelic_compact_nbhd(x, U);
      std::string where = K.to_string() + " sample " + std::to_string(i);
      tally.check(cert_contains(M, x), "certificate contains x at " + where);
      tally.check(verify_cert_subset(M, U), "certificate inside U at " + where);
    }
  }
}

void criterion_split_roundtrip_ring_laws(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(1000);
  for (int which = 0; which < 2; ++which) {
    NumberField K = which == 0 ? NumberField::rationals() : NumberField::quadratic(-1);
    auto pool = field_place_pool(K);
    Rng rng(mix_seed(opt.seed, 0xa0 + static_cast<std::uint64_t>(which)));

    for (long long i = 0; i < n / 2; ++i) {
      FiniteAdele x = random_adele(rng, K, pool);
      PlaceSet S = support(x);
      int extra = static_cast<int>(rng.range(0, 2));
      for (int j = 0; j < extra; ++j)
        S.insert(pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]);

      SAdeleSplit parts = sadele_split(S, x);
      FiniteAdele back = sadele_unsplit(S, parts);
      tally.check(back == x, "unsplit(split(x)) != x over " + K.to_string());
      SAdeleSplit parts2 = sadele_split(S, back);
      tally.check(parts2.on_s == parts.on_s && parts2.off_s == parts.off_s,
                  "split(unsplit(parts)) != parts over " + K.to_string());
      tally.check(is_finite_s_adele(support(x), x), "x not an S_x-adele");
    }

    for (long long i = 0; i < n / 2; ++i) {
      FieldElement a = random_element(rng, K, 25, 10);
      FieldElement b = random_element(rng, K, 25, 10);
      FiniteAdele da = finite_diagonal(K, a);
      FiniteAdele db = finite_diagonal(K, b);
      tally.check(adele_arith(AdeleOp::Add, da, &db) == finite_diagonal(K, fe_add(a, b)),
                  "diagonal additivity");
      tally.check(adele_arith(AdeleOp::Mul, da, &db) == finite_diagonal(K, fe_mul(K, a, b)),
                  "diagonal multiplicativity");
      // Infinite components are floating; tolerance check only, not exact.
      Adele full_a = diagonal_embed(K, a), full_b = diagonal_embed(K, b);
      Adele full_sum = diagonal_embed(K, fe_add(a, b));
      bool inf_ok = true;
      for (std::size_t c = 0; c < full_sum.infinite.components.size(); ++c) {
        std::complex<double> got = full_a.infinite.components[c] + full_b.infinite.components[c];
        double scale = std::max(1.0, std::abs(full_sum.infinite.components[c]));
        inf_ok = inf_ok && std::abs(got - full_sum.infinite.components[c]) <= 1e-12 * scale;
      }
      tally.check(inf_ok, "diagonal additivity at the infinite places (1e-12)");

      FiniteAdele x = random_adele(rng, K, pool);
      FiniteAdele y = random_adele(rng, K, pool);
      PlaceSet bound = support(x);
      for (const FinitePlace& v : support(y)) bound.insert(v);
      for (AdeleOp op : {AdeleOp::Add, AdeleOp::Mul}) {
        FiniteAdele z = adele_arith(op, x, &y);
        bool inside = true;
        for (const FinitePlace& v : support(z)) inside = inside && bound.count(v) > 0;
        tally.check(inside, "support bound violated");
      }
    }
  }
}

void criterion_monotone_refinement(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(1000);
  auto pool = mixed_place_pool();
  Rng rng(mix_seed(opt.seed, 11));
  for (long long i = 0; i < n; ++i) {
    const FinitePlace& v = pool[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    FieldElement x = random_nonzero_element(rng, v.field(), 50, 16);
    std::int64_t val = to_i64(v.additive_valuation(x).value());
    std::int64_t N = val + 1 + rng.range(0, 6);
    std::int64_t N2 = N + 1 + rng.range(0, 5);
    LocalElement lo = local_embed(v, x, N);
    LocalElement hi = local_embed(v, x, N2);
    bool prefix = lo.val() == hi.val() && lo.digits().size() <= hi.digits().size();
    if (prefix)
      for (std::size_t k = 0; k < lo.digits().size(); ++k)
        if (!(lo.digits()[k] == hi.digits()[k])) {
          prefix = false;
          break;
        }
    tally.check(prefix, "refinement changed digits at " + v.spec_string() + " x=" +
                            fe_to_string(x));
  }
}

void criterion_product_formula(const SuiteOptions& opt, Tally& tally) {
  long long n = opt.samples.value_or(10000);
  Rng rng(mix_seed(opt.seed, 12));
  for (long long i = 0; i < n; ++i) {
    Rat x = rng.nonzero_rational(1000000, 1000000);
    Rat prod = archimedean_abs(x);
    for (const Int& p : prime_divisors(num(x) * den(x)))
      prod *= abs_from_valuation(p, Rat(p), x);
    tally.check(prod == 1, "product formula at x=" + rat_to_string(x));
  }
}

struct CriterionSpec {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 = none
  void (*run)(const SuiteOptions&, Tally&);
};

const CriterionSpec kCriteria[] = {
    {1, "valuation axioms (defs of absolute value / additive / multiplicative)", 10.0,
     criterion_valuation_axioms},
    {2, "bridge identity |x|_p = p^(-a_p(x))", 0.0, criterion_bridge_identity},
    {3, "splitting table vs Kronecker oracle, d in {-1,-3,2,5}, p < 100", 0.0,
     criterion_splitting_table},
    {4, "norm-valuation compatibility a_p(N(x)) = sum f * a_P(x)", 0.0,
     criterion_norm_valuation},
    {5, "integer-ball cover suite with size law", 5.0, criterion_cover_suite},
    {6, "digit-map injectivity on O_v/m_v^n", 0.0, criterion_digit_injectivity},
    {7, "local compact-neighborhood certificates", 0.0, criterion_local_certificates},
    {8, "S-adele membership: two topology routes agree", 0.0, criterion_topology_equality},
    {9, "adelic compact-neighborhood certificates", 0.0, criterion_adelic_certificates},
    {10, "split/unsplit roundtrip and ring laws", 0.0, criterion_split_roundtrip_ring_laws},
    {11, "monotone refinement of digit expansions", 0.0, criterion_monotone_refinement},
    {12, "product formula over Q", 0.0, criterion_product_formula},
};

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : kCriteria) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  for (const auto& spec : kCriteria) {
    if (spec.id != id) continue;
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    spec.run(options, tally);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    CriterionResult r;
    r.id = id;
    r.name = spec.name;
    r.checks = tally.checks;
    r.failures = tally.failures;
    r.seconds = seconds;
    bool in_time = spec.time_limit_seconds == 0.0 || seconds < spec.time_limit_seconds;
    r.passed = tally.failures == 0 && in_time;
    std::ostringstream detail;
    detail << tally.checks << " checks, " << tally.failures << " failures";
    if (spec.time_limit_seconds > 0.0)
      detail << ", " << (in_time ? "within" : "OVER") << " " << spec.time_limit_seconds << "s";
    if (!tally.first_failure.empty()) detail << "; first: " << tally.first_failure;
    r.detail = detail.str();
    return r;
  }
  fail(Errc::ParseError, "no criterion with id " + std::to_string(id));
}

std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : criterion_ids()) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS]" : "[FAIL]") << " C" << r.id << " " << r.name << " (" << r.detail
     << ", " << static_cast<long>(r.seconds * 1000) << " ms)";
  return os.str();
}

}  // namespace adelekit
