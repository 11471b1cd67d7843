#include <benchmark/benchmark.h>

#include "ctc/parse.hpp"
#include "ctc/polynomial.hpp"
#include "ctc/weights.hpp"

namespace {

using namespace ctc;

void BM_PolynomialMultiply(benchmark::State& state) {
  auto r = make_roster({"x", "y", "z", "u"});
  Polynomial f = parse_polynomial("x^2*y + z*y + x*z^2 + x*u^2 + u^4 + 1", r);
  Polynomial g = f * f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PolynomialMultiply);

void BM_WeightedValuation(benchmark::State& state) {
  auto r = make_roster({"x", "y", "z", "u"});
  Polynomial f = parse_polynomial("x^2*y + z*y + x*z^2 + x*u^2 + u^4 + 1", r);
  Polynomial g = f * f * f;
  WeightVector w({0, 2, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_valuation(g, w));
  }
}
BENCHMARK(BM_WeightedValuation);

}  // namespace

BENCHMARK_MAIN();
