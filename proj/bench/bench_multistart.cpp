// Serial reference vs OpenMP multistart on constructed polynomials.

#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "realeig/constructor.hpp"
#include "realeig/kernels.hpp"
#include "realeig/solver.hpp"

namespace {

const realeig::HomogeneousPolynomial& target(int d, int n) {
  static std::map<std::pair<int, int>, realeig::HomogeneousPolynomial> cache;
  auto it = cache.find({d, n});
  if (it == cache.end()) {
    realeig::ConstructionParams params;
    params.d = d;
    params.n_target = n;
    it = cache.emplace(std::make_pair(d, n), realeig::construct(params).levels.back().polynomial)
             .first;
  }
  return it->second;
}

template <bool Parallel>
void BM_multistart(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const realeig::PolynomialEvaluator f(target(d, n));
  const int starts = static_cast<int>(50 * 2 * realeig::count_eigenpoints(d, n));
  const realeig::NewtonSettings settings;
  for (auto _ : state) {
    auto out = Parallel ? realeig::multistart_parallel(f, starts, 0xC0FFEE, settings)
                        : realeig::multistart_serial(f, starts, 0xC0FFEE, settings);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * starts);
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({3, 3})->Args({5, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_TEMPLATE(BM_multistart, false)->Name("multistart_serial")->Apply(shapes);
BENCHMARK_TEMPLATE(BM_multistart, true)->Name("multistart_parallel")->Apply(shapes);

BENCHMARK_MAIN();
