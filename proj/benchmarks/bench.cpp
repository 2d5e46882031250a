// Microbenchmarks for the hot paths: field arithmetic, the bit-sliced
// matrix product, the degree-by-degree engine, and the symmetrizer oracle.

#include <benchmark/benchmark.h>

#include <random>

#include "nichols/braided.hpp"
#include "nichols/field.hpp"
#include "nichols/linalg.hpp"
#include "nichols/nichols.hpp"

using namespace nichols;

namespace {

void BM_field_mul(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<uint32_t> xs(1024), ys(1024);
  for (size_t i = 0; i < xs.size(); ++i) {
    xs[i] = 1 + rng() % f.units();
    ys[i] = 1 + rng() % f.units();
  }
  for (auto _ : state) {
    uint32_t acc = 0;
    for (size_t i = 0; i < xs.size(); ++i) acc ^= f.mul(xs[i], ys[i]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}
BENCHMARK(BM_field_mul)->Arg(2)->Arg(6)->Arg(12);

void BM_field_inv(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  std::mt19937 rng(2);
  std::vector<uint32_t> xs(1024);
  for (size_t i = 0; i < xs.size(); ++i) xs[i] = 1 + rng() % f.units();
  for (auto _ : state) {
    uint32_t acc = 0;
    for (uint32_t x : xs) acc ^= f.inv(x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(xs.size()));
}
BENCHMARK(BM_field_inv)->Arg(2)->Arg(6);

void BM_slice_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Field f(4);
  std::mt19937 rng(3);
  SliceMat A(4, n, n), B(4, n, n), C(4, n, n);
  auto fill = [&](SliceMat& M) {
    for (int r = 0; r < M.rows(); ++r) {
      uint64_t* p = M.row(r);
      for (int w = 0; w < 4 * M.words(); ++w)
        p[w] = rng() | (static_cast<uint64_t>(rng()) << 32);
    }
  };
  fill(A);
  fill(B);
  for (auto _ : state) {
    accumulate_product(f, A, B, C);
    benchmark::DoNotOptimize(C.row(0));
  }
}
BENCHMARK(BM_slice_product)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_engine_block16(benchmark::State& state) {
  SpacePtr sp = block(Field(1).one(), 2);
  EngineOptions eo;
  eo.max_degree = 10;
  for (auto _ : state) {
    GradedBasis gb = compute(sp, eo);
    benchmark::DoNotOptimize(gb.dims.data());
  }
}
BENCHMARK(BM_engine_block16);

void BM_engine_lstr(benchmark::State& state) {
  Field f(2);
  Fel w = f.element_of_order(3);
  SpacePtr sp = state.range(0) == 0 ? lstr(w, f.one(), f.one()) : lstr(w, f.one(), w);
  EngineOptions eo;
  eo.max_degree = 18;
  for (auto _ : state) {
    GradedBasis gb = compute(sp, eo);
    benchmark::DoNotOptimize(gb.dims.data());
  }
}
BENCHMARK(BM_engine_lstr)->Arg(0)->Arg(1);

void BM_engine_growth(benchmark::State& state) {
  // unbounded case truncated at the given degree; scales steeply with depth
  Field f(2);
  Fel w = f.element_of_order(3);
  SpacePtr sp = lstr(w, w, w);
  EngineOptions eo;
  eo.max_degree = static_cast<int>(state.range(0));
  eo.keep_tables = false;
  for (auto _ : state) {
    GradedBasis gb = compute(sp, eo);
    benchmark::DoNotOptimize(gb.dims.data());
  }
}
BENCHMARK(BM_engine_growth)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_symmetrizer(benchmark::State& state) {
  Field f(2);
  Fel w = f.element_of_order(3);
  SpacePtr sp = lstr(w, f.one(), w);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long d = symmetrizer_dim(sp, n);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_symmetrizer)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
