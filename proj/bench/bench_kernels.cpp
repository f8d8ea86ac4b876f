#include <benchmark/benchmark.h>

#include "orecalc/rmcode.hpp"
#include "orecalc/tower_io.hpp"

using namespace orecalc;

namespace {

const Tower& tower3() {
  static const Tower t = preset_tower("f4-frobenius-3");
  return t;
}

MonomialSet multilinear3() { return monomial_basis(3, 3, std::vector<unsigned>{1, 1, 1}); }

void BM_GeneratorMatrixSerial(benchmark::State& state) {
  const MonomialSet ms = multilinear3();
  for (auto _ : state) benchmark::DoNotOptimize(generator_matrix_serial(tower3(), ms));
}

void BM_GeneratorMatrixParallel(benchmark::State& state) {
  const MonomialSet ms = multilinear3();
  for (auto _ : state) benchmark::DoNotOptimize(generator_matrix(tower3(), ms));
}

void BM_MinDistanceSerial(benchmark::State& state) {
  const Matrix g = generator_matrix(tower3(), multilinear3());
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_serial(tower3().field(), g));
}

void BM_MinDistanceParallel(benchmark::State& state) {
  const Matrix g = generator_matrix(tower3(), multilinear3());
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(tower3().field(), g));
}

void BM_ZeroSweepSerial(benchmark::State& state) {
  const MultiPoly f = tower3().normalize(Word{FieldElement{1}, {3, 2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(is_identically_zero_serial(tower3(), f));
}

void BM_ZeroSweepParallel(benchmark::State& state) {
  const MultiPoly f = tower3().normalize(Word{FieldElement{1}, {3, 2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(is_identically_zero(tower3(), f));
}

}  // namespace

BENCHMARK(BM_GeneratorMatrixSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorMatrixParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroSweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
