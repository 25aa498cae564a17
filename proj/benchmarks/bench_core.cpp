#include <benchmark/benchmark.h>

#include "divcon/classifier.hpp"
#include "divcon/cli/parse.hpp"
#include "divcon/contraction_atlas.hpp"
#include "divcon/local_algebra.hpp"
#include "divcon/normal_form.hpp"

using namespace divcon;

namespace {

const char* const kGerms[] = {
    "x*y + z^2 + t^3",
    "x*y + z^3 + t^6",
    "x^2 + y^2 + z^3 + x*t^2",
    "x*y + z^4 + t^7 + z^2*t^3",
};

void BM_MilnorNumber(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial(kGerms[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(milnor_data(f).milnor_number);
}
BENCHMARK(BM_MilnorNumber)->DenseRange(0, 3);

void BM_Classify(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial(kGerms[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify_simple(f).type);
}
BENCHMARK(BM_Classify)->DenseRange(0, 2);

void BM_Enumerate(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial(kGerms[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_contractions(f).classes.size());
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 2);

void BM_Membership(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial("x*y + z^3 + t^6");
  const WeightVector w({"x", "y", "z", "t"}, {1, 5, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(decide_membership(f, w).member());
}
BENCHMARK(BM_Membership);

void BM_ReduceE6(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial("x^2 + y^2 + x*y + 2*x*t^2 + 2*x*z*t + y*z*t + z^3 + t^6");
  const WeightVector w({"x", "y", "z", "t"}, {4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_simple(f, w).polynomial.size());
}
BENCHMARK(BM_ReduceE6);

void BM_WeightedNormalForm(benchmark::State& state) {
  const Polynomial f = cli::parse_polynomial("x*y + z^3 + t^6 + z^2*t^3 + x*t^5 + z^3*t");
  const WeightVector w({"x", "y", "z", "t"}, {3, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weighted_normal_form(f, w).polynomial.size());
}
BENCHMARK(BM_WeightedNormalForm);

}  // namespace

BENCHMARK_MAIN();
