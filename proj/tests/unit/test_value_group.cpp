#include <doctest.h>

#include "adelekit/rng.hpp"
#include "adelekit/value_group.hpp"

using namespace adelekit;

TEST_CASE("of_add and to_add invert each other") {
  CHECK(MultIntZero::of_add(0) == MultIntZero::one());
  CHECK(MultIntZero::of_add(5).to_add() == 5);
  CHECK(MultIntZero::of_add(0).to_add() == 0);
  CHECK(MultIntZero::of_add(-3).to_add() == -3);

  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Int n(static_cast<long>(rng.range(-1000000, 1000000)));
    CHECK(MultIntZero::of_add(n).to_add() == n);
  }
}

TEST_CASE("zero has no exponent") {
  CHECK_THROWS_WITH_AS(MultIntZero::zero().to_add(), doctest::Contains("ZeroHasNoExponent"),
                       DomainError);
}

TEST_CASE("multiplication is exponent addition with absorbing zero") {
  CHECK(vg_mul(MultIntZero::of_add(2), MultIntZero::of_add(3)) == MultIntZero::of_add(5));
  CHECK(vg_mul(MultIntZero::zero(), MultIntZero::of_add(7)).is_zero());
  CHECK(vg_mul(MultIntZero::of_add(-1), MultIntZero::of_add(1)) == MultIntZero::one());

  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Int m(static_cast<long>(rng.range(-5000, 5000)));
    Int n(static_cast<long>(rng.range(-5000, 5000)));
    auto a = MultIntZero::of_add(m), b = MultIntZero::of_add(n);
    CHECK(vg_mul(a, b) == MultIntZero::of_add(m + n));
    CHECK(vg_mul(a, b) == vg_mul(b, a));
    CHECK(vg_mul(MultIntZero::zero(), a).is_zero());
    CHECK(vg_mul(a, MultIntZero::one()) == a);
  }
}

TEST_CASE("order: zero first, then exponent order") {
  CHECK(vg_le(MultIntZero::of_add(-1), MultIntZero::of_add(0)));
  CHECK(vg_le(MultIntZero::zero(), MultIntZero::of_add(-100)));
  CHECK_FALSE(vg_le(MultIntZero::of_add(1), MultIntZero::of_add(0)));

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Int m(static_cast<long>(rng.range(-5000, 5000)));
    Int n(static_cast<long>(rng.range(-5000, 5000)));
    CHECK(vg_le(MultIntZero::of_add(m), MultIntZero::of_add(n)) == (m <= n));
    CHECK(vg_le(MultIntZero::zero(), MultIntZero::of_add(m)));
  }
}

TEST_CASE("exponents are arbitrary precision") {
  Int big("123456789012345678901234567890");
  auto g = MultIntZero::of_add(big);
  CHECK(g.to_add() == big);
  CHECK(vg_mul(g, g).to_add() == 2 * big);
  CHECK(vg_le(g, vg_mul(g, g)));
}
