#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "cgc/grid_field.hpp"
#include "cgc/legendre.hpp"

namespace {

cgc::DiskField hyperboloid_support(int n) {
  return cgc::disk_field_from(n, [](double x, double y) {
    return -std::sqrt(std::max(0.0, 1.0 - x * x - y * y));
  });
}

void BM_LegendreTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = hyperboloid_support(n);
  for (auto _ : state) {
    auto dual = cgc::legendre_transform(u, n, 3.0);
    benchmark::DoNotOptimize(dual.v.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_LegendreTransform)->Arg(65)->Arg(129)->Arg(257)->Complexity();

void BM_FieldEval(benchmark::State& state) {
  const auto u = hyperboloid_support(201);
  double x = -0.9;
  for (auto _ : state) {
    x = x >= 0.9 ? -0.9 : x + 1e-3;
    benchmark::DoNotOptimize(u.eval(x, 0.1));
  }
}
BENCHMARK(BM_FieldEval);

}  // namespace

BENCHMARK_MAIN();
