#include <benchmark/benchmark.h>

#include "adelekit/rng.hpp"
#include "adelekit/topology.hpp"

namespace {

using namespace adelekit;

void BM_PadicValuation(benchmark::State& state) {
  Rng rng(1);
  std::vector<Rat> samples;
  for (int i = 0; i < 512; ++i) samples.push_back(rng.nonzero_rational(1000000, 1000000));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(padic_additive(3, samples[i++ % samples.size()]));
  }
}
BENCHMARK(BM_PadicValuation);

void BM_FactorPrime(benchmark::State& state) {
  QuadraticField K = make_field(state.range(0));
  std::vector<Int> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_rational_prime(K, primes[i++ % primes.size()]));
  }
}
BENCHMARK(BM_FactorPrime)->Arg(-1)->Arg(5);

void BM_PrimeValuation(benchmark::State& state) {
  QuadraticField K = make_field(-1);
  PrimeIdeal P = factor_rational_prime(K, 2)[0].first;
  Rng rng(2);
  std::vector<FieldElement> xs;
  for (int i = 0; i < 256; ++i)
    xs.push_back({Rat(Int(static_cast<long>(rng.range(-1000, 1000)))),
                  Rat(Int(static_cast<long>(rng.range(-1000, 1000))))});
  std::size_t i = 0;
  for (auto _ : state) {
    const FieldElement& x = xs[i++ % xs.size()];
    if (x.is_zero()) continue;
    benchmark::DoNotOptimize(prime_valuation_additive(K, P, x));
  }
}
BENCHMARK(BM_PrimeValuation);

void BM_LocalEmbed(benchmark::State& state) {
  FinitePlace v = state.range(0) == 0
                      ? FinitePlace::of_rational(3)
                      : FinitePlace::over(NumberField::quadratic(-1), 2);
  FieldElement x{make_rat(22, 7), Rat(0)};
  if (!v.is_rational_place()) x.b = make_rat(3, 5);
  std::int64_t prec = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_embed(v, x, prec));
  }
}
BENCHMARK(BM_LocalEmbed)->Args({0, 8})->Args({0, 32})->Args({1, 8})->Args({1, 32});

void BM_VerifyCover(benchmark::State& state) {
  FinitePlace v = FinitePlace::over(NumberField::quadratic(-1), 3);  // q = 9
  MultIntZero gamma = MultIntZero::of_add(state.range(0));
  auto centers = cover_integers(v, gamma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_cover(v, gamma, centers));
  }
}
BENCHMARK(BM_VerifyCover)->Arg(0)->Arg(-1)->Arg(-2)->Arg(-3);

void BM_AdeleMul(benchmark::State& state) {
  NumberField K = NumberField::quadratic(-1);
  FinitePlace a = FinitePlace::over(K, 2);
  FinitePlace b = FinitePlace::over(K, 5, 0);
  FiniteAdele x(K, {make_rat(1, 6), Rat(2)}, {{a, FieldElement{Rat(1), make_rat(1, 2)}}});
  FiniteAdele y(K, {Rat(3), make_rat(2, 5)}, {{b, FieldElement{make_rat(4, 5), Rat(0)}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(adele_arith(AdeleOp::Mul, x, &y));
  }
}
BENCHMARK(BM_AdeleMul);

void BM_Support(benchmark::State& state) {
  NumberField K = NumberField::quadratic(-1);
  FinitePlace a = FinitePlace::over(K, 2);
  FiniteAdele x(K, {make_rat(7, 30), make_rat(2, 5)},
                {{a, FieldElement{make_rat(1, 4), Rat(1)}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(support(x));
  }
}
BENCHMARK(BM_Support);

}  // namespace

BENCHMARK_MAIN();
