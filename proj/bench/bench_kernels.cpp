// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "lpa/decide.hpp"
#include "lpa/kernels.hpp"

namespace {

using lpa::FieldSpec;

void BM_AnnihilatedMatrixSerial(benchmark::State& state) {
  FieldSpec k = FieldSpec::prime(static_cast<std::uint64_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::kernels::serial::find_annihilated_matrix(k, n));
}

void BM_AnnihilatedMatrixParallel(benchmark::State& state) {
  FieldSpec k = FieldSpec::prime(static_cast<std::uint64_t>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lpa::kernels::find_annihilated_matrix(k, n));
}

// {p, n}: GF(5), n = 3 hits within the first chunk; GF(19), n = 2 has no
// annihilated matrix, so all 19^4 candidates are scanned.
BENCHMARK(BM_AnnihilatedMatrixSerial)->Args({5, 3})->Args({19, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnihilatedMatrixParallel)->Args({5, 3})->Args({19, 2})->Unit(benchmark::kMillisecond);

void BM_ImproperTupleSerial(benchmark::State& state) {
  FieldSpec k = FieldSpec::quadratic(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(lpa::kernels::serial::find_improper_tuple(k, static_cast<std::size_t>(state.range(0))));
}

void BM_ImproperTupleParallel(benchmark::State& state) {
  FieldSpec k = FieldSpec::quadratic(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(lpa::kernels::find_improper_tuple(k, static_cast<std::size_t>(state.range(0))));
}

BENCHMARK(BM_ImproperTupleSerial)->Arg(2)->Arg(3);
BENCHMARK(BM_ImproperTupleParallel)->Arg(2)->Arg(3);

std::vector<lpa::GraphPtr> grid_graphs() {
  std::vector<lpa::GraphPtr> gs;
  for (std::size_t n = 1; n <= 6; ++n) gs.push_back(lpa::share(lpa::standard_graph(lpa::StandardKind::line, n)));
  gs.push_back(lpa::share(lpa::standard_graph(lpa::StandardKind::rose, 2)));
  gs.push_back(lpa::share(lpa::standard_graph(lpa::StandardKind::toeplitz, 0)));
  return gs;
}

std::vector<FieldSpec> grid_fields() {
  return {FieldSpec::rationals(), FieldSpec::gaussian(lpa::Involution::identity),
          FieldSpec::gaussian(lpa::Involution::conjugation), FieldSpec::prime(3), FieldSpec::prime(5)};
}

void BM_DecideGridSerial(benchmark::State& state) {
  auto gs = grid_graphs();
  auto ks = grid_fields();
  for (auto _ : state) benchmark::DoNotOptimize(lpa::kernels::serial::decide_grid(gs, ks));
}

void BM_DecideGridParallel(benchmark::State& state) {
  auto gs = grid_graphs();
  auto ks = grid_fields();
  for (auto _ : state) benchmark::DoNotOptimize(lpa::kernels::decide_grid(gs, ks));
}

BENCHMARK(BM_DecideGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideGridParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
