#include <benchmark/benchmark.h>

#include <random>

#include "latk/pipeline.hpp"
#include "latk/triangulation.hpp"

using namespace latk;

namespace {

/// One low generator and `n - 1` generators of degree 10..24 in dimension 3.
IntegerMatrix rough_cone(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> high(10, 24), rest(-7, 7);
  IntegerMatrix g(0, 3);
  for (std::size_t i = 1; i < n; ++i) g.append_row(IntegerVector{high(rng), rest(rng), rest(rng)});
  g.append_row(IntegerVector{1, rest(rng) % 2, rest(rng) % 2});
  return g;
}

void BM_LexTriangulation(benchmark::State& state) {
  IntegerMatrix g = rough_cone(static_cast<std::size_t>(state.range(0)), 5);
  Integer detsum;
  for (auto _ : state) {
    Triangulation t = lex_triangulation(g);
    detsum = t.detsum;
    benchmark::DoNotOptimize(t);
  }
  state.counters["detsum"] = static_cast<double>(detsum.to_int64());
}
BENCHMARK(BM_LexTriangulation)->Arg(6)->Arg(12)->Arg(24);

void BM_BottomTriangulation(benchmark::State& state) {
  IntegerMatrix g = rough_cone(static_cast<std::size_t>(state.range(0)), 5);
  Integer detsum;
  for (auto _ : state) {
    Triangulation t = bottom_triangulation(g);
    detsum = t.detsum;
    benchmark::DoNotOptimize(t);
  }
  state.counters["detsum"] = static_cast<double>(detsum.to_int64());
}
BENCHMARK(BM_BottomTriangulation)->Arg(6)->Arg(12)->Arg(24);

InputSystem bench_input(std::size_t n) {
  InputSystem s;
  s.dim = 3;
  s.cone = rough_cone(n, 9);
  s.grading = IntegerVector{1, 0, 0};
  return s;
}

void BM_HilbertBasis(benchmark::State& state) {
  InputSystem s = bench_input(static_cast<std::size_t>(state.range(0)));
  RunConfig cfg;
  cfg.hilbert_basis = true;
  cfg.bottom = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(s, cfg));
}
BENCHMARK(BM_HilbertBasis)->Args({6, 0})->Args({6, 1})->Args({12, 0})->Args({12, 1})->Unit(benchmark::kMillisecond);

/// Generators of degree 1..7, so the quasipolynomial period stays small.
InputSystem moderate_input(std::size_t n) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> first(1, 7), rest(-7, 7);
  InputSystem s;
  s.dim = 3;
  s.cone = IntegerMatrix(0, 3);
  for (std::size_t i = 0; i < n; ++i) s.cone.append_row(IntegerVector{first(rng), rest(rng), rest(rng)});
  s.grading = IntegerVector{1, 0, 0};
  return s;
}

void BM_HilbertSeries(benchmark::State& state) {
  InputSystem s = moderate_input(static_cast<std::size_t>(state.range(0)));
  RunConfig cfg;
  cfg.hilbert_series = true;
  cfg.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run(s, cfg));
}
BENCHMARK(BM_HilbertSeries)->Args({12, 1})->Args({12, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
