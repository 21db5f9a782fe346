#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>

#include "adelekit/rng.hpp"
#include "oracles.hpp"

using namespace adelekit;
using namespace adelekit::testing;

namespace {

FieldElement elem(long a, long b) { return FieldElement{Rat(a), Rat(b)}; }

}  // namespace

TEST_CASE("make_field validates and classifies") {
  QuadraticField gauss = make_field(-1);
  CHECK(gauss.omega_kind() == OmegaKind::SqrtD);  // -1 = 3 mod 4
  CHECK(gauss.discriminant() == -4);

  QuadraticField root5 = make_field(5);
  CHECK(root5.omega_kind() == OmegaKind::HalfOnePlusSqrtD);
  CHECK(root5.discriminant() == 5);

  CHECK_THROWS_WITH_AS(make_field(12), doctest::Contains("NotSquarefree"), DomainError);
  CHECK_THROWS_WITH_AS(make_field(0), doctest::Contains("DegenerateD"), DomainError);
  CHECK_THROWS_WITH_AS(make_field(1), doctest::Contains("DegenerateD"), DomainError);
  CHECK(make_field(-3).discriminant() == -3);
}

TEST_CASE("norm and trace") {
  QuadraticField gauss = make_field(-1);
  // (2+i)(2-i) = 5, (2+i)+(2-i) = 4
  CHECK(norm_trace(gauss, elem(2, 1)) == std::pair{Rat(5), Rat(4)});
  CHECK(norm_trace(gauss, FieldElement()) == std::pair{Rat(0), Rat(0)});

  QuadraticField root5 = make_field(5);
  // w^2 = w + 1, so N(w) = -1, Tr(w) = 1
  CHECK(norm_trace(root5, elem(0, 1)) == std::pair{Rat(-1), Rat(1)});
}

TEST_CASE("element arithmetic closes over the minimal polynomial") {
  Rng rng(21);
  for (long d : {-1L, -3L, 2L, 5L, 17L}) {
    NumberField K = NumberField::quadratic(d);
    for (int i = 0; i < 50; ++i) {
      FieldElement x{rng.rational(50, 10), rng.rational(50, 10)};
      FieldElement y{rng.rational(50, 10), rng.rational(50, 10)};
      // norm is multiplicative
      CHECK(fe_norm(K, fe_mul(K, x, y)) == fe_norm(K, x) * fe_norm(K, y));
      if (!y.is_zero())
        CHECK(fe_mul(K, fe_div(K, x, y), y) == x);
      // conj is a ring homomorphism
      CHECK(fe_conj(K, fe_mul(K, x, y)) == fe_mul(K, fe_conj(K, x), fe_conj(K, y)));
    }
  }
}

TEST_CASE("factorization of rational primes in Q(i)") {
  QuadraticField gauss = make_field(-1);

  auto split = factor_rational_prime(gauss, 5);
  REQUIRE(split.size() == 2);
  CHECK(split[0].first.gen2 == elem(-2, 1));  // (5, w-2)
  CHECK(split[1].first.gen2 == elem(2, 1));   // (5, w+2)
  for (const auto& [P, mult] : split) {
    CHECK(P.e == 1);
    CHECK(P.f == 1);
    CHECK(mult == 1);
    CHECK(P.hnf.det() == 5);
  }

  auto inert = factor_rational_prime(gauss, 3);
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].first.e == 1);
  CHECK(inert[0].first.f == 2);
  CHECK(inert[0].first.hnf.det() == 9);

  auto ramified = factor_rational_prime(gauss, 2);
  REQUIRE(ramified.size() == 1);
  CHECK(ramified[0].first.e == 2);
  CHECK(ramified[0].first.f == 1);
  CHECK(ramified[0].first.gen2 == elem(1, 1));  // (2, w+1)
  CHECK(ramified[0].second == 2);

  CHECK_THROWS_WITH_AS(factor_rational_prime(gauss, 6), doctest::Contains("NotPrime"),
                       DomainError);
}

TEST_CASE("fundamental identity and Kronecker classification across fields") {
  for (long d : {-1L, -3L, 2L, 5L, -7L, 13L}) {
    QuadraticField K = make_field(d);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      auto factors = factor_rational_prime(K, p);
      int sum_ef = 0;
      Hnf2 prod = Hnf2::identity();
      for (const auto& [P, e] : factors) {
        sum_ef += P.e * P.f;
        prod = hnf_mul(K, prod, hnf_pow(K, P.hnf, static_cast<std::uint64_t>(e)));
      }
      CHECK(sum_ef == 2);
      CHECK(prod == Hnf2::principal_integer(p));

      int symbol = oracle_kronecker(K.discriminant(), p);
      int expected_count = symbol == 1 ? 2 : 1;
      int expected_e = symbol == 0 ? 2 : 1;
      CHECK(static_cast<int>(factors.size()) == expected_count);
      CHECK(factors[0].first.e == expected_e);
    }
  }
}

TEST_CASE("ideal power membership") {
  QuadraticField gauss = make_field(-1);
  PrimeIdeal P2 = factor_rational_prime(gauss, 2)[0].first;

  CHECK(ideal_pow_membership(gauss, P2, 2, elem(2, 0)));   // (2) = P^2
  CHECK(ideal_pow_membership(gauss, P2, 0, elem(17, 3)));  // P^0 = O_K
  CHECK_FALSE(ideal_pow_membership(gauss, P2, 2, elem(1, 1)));  // a_P(1+i) = 1

  CHECK_THROWS_WITH_AS(ideal_pow_membership(gauss, P2, 1, FieldElement{make_rat(1, 2), Rat(0)}),
                       doctest::Contains("NotIntegral"), DomainError);
}

TEST_CASE("prime valuations against the norm oracle") {
  QuadraticField gauss = make_field(-1);
  PrimeIdeal P2 = factor_rational_prime(gauss, 2)[0].first;

  REQUIRE(oracle_unsplit_valuation(gauss, P2, elem(1, 1)) == 1);
  CHECK(prime_valuation_additive(gauss, P2, elem(1, 1)) == AdditiveValue::finite(1));
  REQUIRE(oracle_unsplit_valuation(gauss, P2, elem(2, 0)) == 2);
  CHECK(prime_valuation_additive(gauss, P2, elem(2, 0)) == AdditiveValue::finite(2));
  CHECK(prime_valuation_additive(gauss, P2, FieldElement()).is_infinity());

  CHECK(prime_valuation_mult(gauss, P2, elem(1, 1)) == MultIntZero::of_add(-1));
  CHECK(prime_valuation_mult(gauss, P2, FieldElement()).is_zero());

  PrimeIdeal P3 = factor_rational_prime(gauss, 3)[0].first;
  // a_P(1/3) = -e * a_3(3) = -1 at the inert place
  CHECK(prime_valuation_mult(gauss, P3, FieldElement{make_rat(1, 3), Rat(0)}) ==
        MultIntZero::of_add(1));

  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    FieldElement x{Rat(Int(static_cast<long>(rng.range(-40, 40)))),
                   Rat(Int(static_cast<long>(rng.range(-40, 40))))};
    if (x.is_zero()) continue;
    for (const auto& P : {P2, P3}) {
      auto got = prime_valuation_additive(gauss, P, x);
      CHECK(got == AdditiveValue::finite(oracle_unsplit_valuation(gauss, P, x)));
    }
  }
}

TEST_CASE("valuation additivity, norm compatibility, ramification") {
  Rng rng(23);
  for (long d : {-1L, 5L, 2L}) {
    QuadraticField K = make_field(d);
    NumberField F = NumberField::quadratic(d);
    for (long p : {2L, 3L, 5L}) {
      auto factors = factor_rational_prime(K, p);
      for (const auto& [P, e] : factors) {
        CHECK(prime_valuation_additive(K, P, FieldElement(Rat(p))) ==
              AdditiveValue::finite(P.e));
      }
      for (int i = 0; i < 40; ++i) {
        FieldElement x{rng.rational(30, 6), rng.rational(30, 6)};
        FieldElement y{rng.rational(30, 6), rng.rational(30, 6)};
        if (x.is_zero() || y.is_zero()) continue;
        for (const auto& [P, e] : factors)
          CHECK(prime_valuation_additive(K, P, fe_mul(F, x, y)) ==
                prime_valuation_additive(K, P, x) + prime_valuation_additive(K, P, y));
        // a_p(N(x)) = sum over P | p of f_P * a_P(x)
        AdditiveValue lhs = padic_additive(p, fe_norm(F, x));
        Int rhs = 0;
        for (const auto& [P, e] : factors)
          rhs += Int(P.f) * prime_valuation_additive(K, P, x).value();
        CHECK(lhs == AdditiveValue::finite(rhs));
      }
    }
  }
}

TEST_CASE("infinite places") {
  auto real_places = infinite_places(make_field(2));
  REQUIRE(real_places.size() == 2);
  CHECK(real_places[0].kind == InfinitePlaceData::Kind::Real);
  CHECK(real_places[0].root_choice == 1);
  CHECK(real_places[1].root_choice == -1);

  auto complex_places = infinite_places(make_field(-1));
  REQUIRE(complex_places.size() == 1);
  CHECK(complex_places[0].kind == InfinitePlaceData::Kind::Complex);

  CHECK(infinite_places(make_field(5)).size() == 2);
  CHECK(infinite_places(NumberField::rationals()).size() == 1);
}

TEST_CASE("infinite absolute values to 1e-12") {
  NumberField root2 = NumberField::quadratic(2);
  auto places = infinite_places(root2);
  CHECK(infinite_abs(root2, places[0], elem(0, 1)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  NumberField gauss = NumberField::quadratic(-1);
  CHECK(infinite_abs(gauss, infinite_places(gauss)[0], elem(2, 1)) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

  CHECK(infinite_abs(gauss, infinite_places(gauss)[0], FieldElement()) == 0.0);

  // the two real places separate elements with a nonzero w-part
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    FieldElement x{rng.rational(100, 10), rng.nonzero_rational(100, 10)};
    double a0 = infinite_abs(root2, places[0], x);
    double a1 = infinite_abs(root2, places[1], x);
    FieldElement sq = fe_mul(root2, x, x);
    (void)sq;
    CHECK(std::abs(a0 - a1) + std::abs(a0 + a1) > 0);
    double v0 = x.a.get_d() + x.b.get_d() * std::sqrt(2.0);
    double v1 = x.a.get_d() - x.b.get_d() * std::sqrt(2.0);
    CHECK(a0 == doctest::Approx(std::abs(v0)).epsilon(1e-9));
    CHECK(a1 == doctest::Approx(std::abs(v1)).epsilon(1e-9));
  }
}

TEST_CASE("factorization cache tolerates concurrent lookups") {
  NumberField gauss = NumberField::quadratic(-1);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&] {
      for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        auto places = places_over(gauss, p);
        int sum_ef = 0;
        for (const FinitePlace& v : places) sum_ef += v.e() * v.f();
        if (sum_ef != 2) ++mismatches;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_CASE("finite places: identity, ordering, spec strings") {
  NumberField gauss = NumberField::quadratic(-1);
  auto over5 = places_over(gauss, 5);
  REQUIRE(over5.size() == 2);
  CHECK(over5[0].spec_string() == "d:-1,p:5,i:0");
  CHECK(over5[1].spec_string() == "d:-1,p:5,i:1");
  CHECK(over5[0] < over5[1]);
  CHECK_FALSE(over5[0] == over5[1]);

  CHECK(FinitePlace::of_rational(3).spec_string() == "p:3");
  CHECK_THROWS_WITH_AS(FinitePlace::over(gauss, 3, 1), doctest::Contains("BadPlace"),
                       DomainError);
  CHECK_THROWS_WITH_AS(FinitePlace::of_rational(8), doctest::Contains("NotPrime"), DomainError);

  // uniformizer has valuation exactly 1 everywhere, including ramified places
  for (const FinitePlace& v :
       {FinitePlace::of_rational(3), FinitePlace::over(gauss, 2), FinitePlace::over(gauss, 5),
        FinitePlace::over(gauss, 7), FinitePlace::over(NumberField::quadratic(5), 5)}) {
    CHECK(v.additive_valuation(v.uniformizer_element()) == AdditiveValue::finite(1));
  }
}
