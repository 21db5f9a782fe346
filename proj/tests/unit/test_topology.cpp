#include <doctest.h>

#include "adelekit/rng.hpp"
#include "adelekit/topology.hpp"

using namespace adelekit;

namespace {

const NumberField Q = NumberField::rationals();
const NumberField Qi = NumberField::quadratic(-1);

MultIntZero gamma_of(long g) { return MultIntZero::of_add(g); }

}  // namespace

TEST_CASE("cover_integers matches the case analysis") {
  FinitePlace v3 = FinitePlace::of_rational(3);

  auto residues = cover_integers(v3, gamma_of(0));
  REQUIRE(residues.size() == 3);
  CHECK(residues[0] == FieldElement());
  CHECK(residues[1] == FieldElement(Rat(1)));
  CHECK(residues[2] == FieldElement(Rat(2)));

  auto single = cover_integers(v3, gamma_of(1));
  REQUIRE(single.size() == 1);
  CHECK(single[0].is_zero());

  CHECK(cover_integers(FinitePlace::of_rational(2), gamma_of(-1)).size() == 4);  // 2^2

  CHECK_THROWS_WITH_AS(cover_integers(v3, MultIntZero::zero()),
                       doctest::Contains("ZeroRadius"), DomainError);
}

TEST_CASE("verify_cover is sound on covers and rejects punctured ones") {
  FinitePlace v3 = FinitePlace::of_rational(3);
  CHECK(verify_cover(v3, gamma_of(0),
                     {FieldElement(), FieldElement(Rat(1)), FieldElement(Rat(2))}));
  // the class of 2 is uncovered: v(2-0) = v(2-1) = ofAdd(0), not < ofAdd(0)
  CHECK_FALSE(verify_cover(v3, gamma_of(0), {FieldElement(), FieldElement(Rat(1))}));
  CHECK(verify_cover(FinitePlace::of_rational(2), gamma_of(1), {FieldElement()}));

  CHECK_THROWS_WITH_AS(verify_cover(v3, gamma_of(-30), {FieldElement()}),
                       doctest::Contains("BudgetExceeded"), DomainError);
}

TEST_CASE("cover size law, soundness and minimality across places") {
  std::vector<FinitePlace> places = {FinitePlace::of_rational(2), FinitePlace::of_rational(5),
                                     FinitePlace::over(Qi, 3), FinitePlace::over(Qi, 2)};
  for (const FinitePlace& v : places) {
    for (long g = -2; g <= 2; ++g) {
      auto centers = cover_integers(v, gamma_of(g));
      CHECK(verify_cover(v, gamma_of(g), centers));
      Int expected = g >= 1 ? Int(1) : int_pow(v.q(), static_cast<std::uint64_t>(1 - g));
      CHECK(Int(static_cast<long>(centers.size())) == expected);
    }
    // minimality at gamma = ofAdd(0): every residue class needs its own center
    auto centers = cover_integers(v, gamma_of(0));
    for (std::size_t drop = 0; drop < centers.size(); ++drop) {
      std::vector<FieldElement> punctured;
      for (std::size_t i = 0; i < centers.size(); ++i)
        if (i != drop) punctured.push_back(centers[i]);
      CHECK_FALSE(verify_cover(v, gamma_of(0), punctured));
    }
  }
}

TEST_CASE("local compact neighborhoods") {
  FinitePlace v3 = FinitePlace::of_rational(3);
  ScaledIntegerBall c1 = compact_nbhd_local(v3, FieldElement(), gamma_of(-2));
  CHECK(c1.exponent == 3);  // least m with -m < -2

  FinitePlace v5 = FinitePlace::of_rational(5);
  ScaledIntegerBall c2 = compact_nbhd_local(v5, FieldElement(make_rat(1, 5)), gamma_of(0));
  CHECK(c2.exponent == 1);

  ScaledIntegerBall c3 = compact_nbhd_local(v3, FieldElement(Rat(2)), gamma_of(10));
  CHECK(c3.exponent == -9);

  CHECK_THROWS_WITH_AS(compact_nbhd_local(v3, FieldElement(), MultIntZero::zero()),
                       doctest::Contains("ZeroRadius"), DomainError);
}

TEST_CASE("certificate membership") {
  FinitePlace v3 = FinitePlace::of_rational(3);
  ScaledIntegerBall cert{v3, FieldElement(), Int(3)};  // 27 Z_3
  CHECK(cert_contains(cert, v3, FieldElement(Rat(27))));
  CHECK_FALSE(cert_contains(cert, v3, FieldElement(Rat(9))));
  CHECK_THROWS_WITH_AS(cert_contains(cert, FinitePlace::of_rational(5), FieldElement()),
                       doctest::Contains("PlaceMismatch"), DomainError);

  CompactCert empty_product = CompactCert::product(Q, {});
  CHECK(cert_contains(empty_product, finite_diagonal(Q, FieldElement(Rat(12)))));
  CHECK_FALSE(cert_contains(empty_product, finite_diagonal(Q, FieldElement(make_rat(1, 2)))));
}

TEST_CASE("basic open membership") {
  FinitePlace v2 = FinitePlace::of_rational(2);
  FinitePlace v3 = FinitePlace::of_rational(3);
  FieldElement sixth(make_rat(1, 6));
  FiniteAdele x = finite_diagonal(Q, sixth);

  // all-O_v open: integral adeles only
  BasicOpen all_integral{Q, {}};
  CHECK(basic_open_membership(finite_diagonal(Q, FieldElement()), all_integral));
  CHECK_FALSE(basic_open_membership(x, all_integral));

  // fails integrality at 3, which is outside I
  BasicOpen only2{Q, {{v2, {Ball{v2, sixth, gamma_of(2)}}}}};
  CHECK_FALSE(basic_open_membership(x, only2));

  BasicOpen both{Q,
                 {{v2, {Ball{v2, sixth, gamma_of(1)}}}, {v3, {Ball{v3, sixth, gamma_of(1)}}}}};
  CHECK(basic_open_membership(x, both));

  CHECK_THROWS_WITH_AS(basic_open_membership(finite_diagonal(Qi, FieldElement()), both),
                       doctest::Contains("FieldMismatch"), DomainError);
}

TEST_CASE("two membership routes agree (worked examples)") {
  FinitePlace v2 = FinitePlace::of_rational(2);
  FinitePlace v3 = FinitePlace::of_rational(3);

  FiniteAdele third = finite_diagonal(Q, FieldElement(make_rat(1, 3)));
  BasicOpen u1{Q, {{v3, {Ball{v3, FieldElement(make_rat(1, 3)), gamma_of(2)}}}}};
  CHECK(sadele_membership_two_ways({v3}, third, u1) == std::pair{true, true});

  FiniteAdele one = finite_diagonal(Q, FieldElement(Rat(1)));
  BasicOpen all_integral{Q, {}};
  CHECK(sadele_membership_two_ways({}, one, all_integral) == std::pair{true, true});

  FiniteAdele half = finite_diagonal(Q, FieldElement(make_rat(1, 2)));
  BasicOpen u2{Q, {{v2, {Ball{v2, FieldElement(), gamma_of(0)}}}}};
  CHECK(sadele_membership_two_ways({v2}, half, u2) == std::pair{false, false});

  CHECK_THROWS_WITH_AS(sadele_membership_two_ways({v2}, third, u2),
                       doctest::Contains("NotSAdele"), DomainError);
}

TEST_CASE("adelic compact neighborhoods (worked examples)") {
  FinitePlace v2 = FinitePlace::of_rational(2);
  FinitePlace v3 = FinitePlace::of_rational(3);

  FiniteAdele third = finite_diagonal(Q, FieldElement(make_rat(1, 3)));
  BasicOpen u{Q, {{v3, {Ball{v3, FieldElement(make_rat(1, 3)), gamma_of(2)}}}}};
  CompactCert m = adelic_compact_nbhd(third, u);
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.blocks.at(v3).exponent == -1);  // of_add(1) < of_add(2)
  CHECK(cert_contains(m, third));
  CHECK(verify_cert_subset(m, u));

  // integral diagonal in the all-O_v open: the empty product certificate
  FiniteAdele zero = finite_diagonal(Q, FieldElement());
  CompactCert m0 = adelic_compact_nbhd(zero, BasicOpen{Q, {}});
  CHECK(m0.blocks.empty());
  CHECK(cert_contains(m0, zero));

  FieldElement sixth(make_rat(1, 6));
  FiniteAdele x = finite_diagonal(Q, sixth);
  BasicOpen u6{Q,
               {{v2, {Ball{v2, sixth, gamma_of(1)}}}, {v3, {Ball{v3, sixth, gamma_of(1)}}}}};
  CompactCert m6 = adelic_compact_nbhd(x, u6);
  CHECK(m6.blocks.at(v2).exponent == 0);
  CHECK(m6.blocks.at(v3).exponent == 0);
  CHECK(cert_contains(m6, x));
  CHECK(verify_cert_subset(m6, u6));

  CHECK_THROWS_WITH_AS(adelic_compact_nbhd(x, BasicOpen{Q, {}}),
                       doctest::Contains("NotInOpen"), DomainError);
}

TEST_CASE("certificate-subset checker (worked examples)") {
  FinitePlace v3 = FinitePlace::of_rational(3);

  CompactCert inside = CompactCert::scaled(
      ScaledIntegerBall{v3, FieldElement(make_rat(1, 3)), Int(-1)});
  BasicOpen u{Q, {{v3, {Ball{v3, FieldElement(make_rat(1, 3)), gamma_of(2)}}}}};
  CHECK(verify_cert_subset(inside, u));

  // O_v is not inside m_v
  CompactCert integers = CompactCert::scaled(ScaledIntegerBall{v3, FieldElement(), Int(0)});
  BasicOpen maximal_ideal{Q, {{v3, {Ball{v3, FieldElement(), gamma_of(0)}}}}};
  CHECK_FALSE(verify_cert_subset(integers, maximal_ideal));

  CHECK(verify_cert_subset(CompactCert::product(Q, {}), BasicOpen{Q, {}}));

  // a block with a pole cannot sit inside the implicit O_v off the index set
  CompactCert pole = CompactCert::scaled(
      ScaledIntegerBall{v3, FieldElement(make_rat(1, 3)), Int(1)});
  CHECK_FALSE(verify_cert_subset(pole, BasicOpen{Q, {}}));
}

TEST_CASE("ball intersection and basic-open intersection") {
  FinitePlace v3 = FinitePlace::of_rational(3);
  Ball big{v3, FieldElement(), gamma_of(2)};
  Ball small{v3, FieldElement(Rat(3)), gamma_of(-1)};

  // centers are distance of_add(-1) apart, within the big radius: nested
  auto nested = ball_intersect(big, small);
  REQUIRE(nested.has_value());
  CHECK(nested->radius == gamma_of(-1));
  CHECK(nested->center == FieldElement(Rat(3)));

  Ball far{v3, FieldElement(Rat(1)), gamma_of(0)};
  CHECK_FALSE(ball_intersect(small, far).has_value());

  Rng rng(51);
  std::vector<FinitePlace> pool = {FinitePlace::of_rational(2), FinitePlace::of_rational(3),
                                   FinitePlace::of_rational(5)};
  for (int i = 0; i < 120; ++i) {
    auto random_open = [&]() {
      BasicOpen u{Q, {}};
      for (const FinitePlace& v : pool) {
        if (rng.chance(1, 2)) continue;
        std::vector<Ball> balls;
        for (int b = 0, n = static_cast<int>(rng.range(1, 2)); b < n; ++b)
          balls.push_back(Ball{v, FieldElement(rng.rational(6, 4)),
                               gamma_of(rng.range(-2, 3))});
        u.opens.emplace(v, std::move(balls));
      }
      return u;
    };
    BasicOpen u = random_open(), w = random_open();
    BasicOpen uw = basic_open_intersect(u, w);
    FieldElement g(rng.rational(12, 6));
    std::map<FinitePlace, FieldElement> corr;
    if (rng.chance(1, 2))
      corr[pool[static_cast<std::size_t>(rng.range(0, 2))]] = FieldElement(rng.rational(6, 6));
    FiniteAdele x(Q, g, corr);
    CHECK(basic_open_membership(x, uw) ==
          (basic_open_membership(x, u) && basic_open_membership(x, w)));
  }
}

TEST_CASE("random certificates at quadratic places") {
  Rng rng(52);
  std::vector<FinitePlace> pool;
  for (long p : {2L, 3L, 5L})
    for (const FinitePlace& v : places_over(Qi, p)) pool.push_back(v);

  for (int i = 0; i < 80; ++i) {
    const FinitePlace& v = pool[static_cast<std::size_t>(
        rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
    FieldElement x{rng.rational(40, 12), rng.rational(40, 12)};
    MultIntZero g = gamma_of(rng.range(-4, 4));
    ScaledIntegerBall cert = compact_nbhd_local(v, x, g);
    CHECK(cert_contains(cert, v, x));
    BasicOpen ball{Qi, {{v, {Ball{v, x, g}}}}};
    CHECK(verify_cert_subset(CompactCert::scaled(cert), ball));
  }
}

TEST_CASE("infinite-place neighborhoods are numeric conveniences") {
  NumberField root2 = NumberField::quadratic(2);
  InfiniteNbhd nb =
      infinite_compact_nbhd(root2, infinite_places(root2)[0], FieldElement{Rat(0), Rat(1)}, 0.5);
  CHECK_FALSE(nb.is_disc);
  CHECK(nb.center_re == doctest::Approx(std::sqrt(2.0)));
  CHECK(nb.radius == 0.5);

  InfiniteNbhd disc =
      infinite_compact_nbhd(Qi, infinite_places(Qi)[0], FieldElement{Rat(0), Rat(1)}, 1.0);
  CHECK(disc.is_disc);
  CHECK(disc.center_im == doctest::Approx(1.0));
}
