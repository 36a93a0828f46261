#include <benchmark/benchmark.h>

#include "dsbent/boolfn.hpp"
#include "dsbent/carlet.hpp"
#include "dsbent/charsum.hpp"
#include "dsbent/hilbert.hpp"

using namespace dsbent;

namespace {

TruthTable pseudo_random_table(unsigned t, std::uint64_t seed) {
  BitVec b(std::uint64_t{1} << t);
  std::uint64_t s = seed | 1;
  for (std::uint64_t i = 0; i < b.size(); ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    if (s & 1) b.set(i);
  }
  return TruthTable(t, std::move(b));
}

void BM_WalshTransform(benchmark::State& state) {
  const unsigned t = static_cast<unsigned>(state.range(0));
  const TruthTable f = pseudo_random_table(t, 42);
  for (auto _ : state) benchmark::DoNotOptimize(walsh(f));
  state.SetComplexityN(std::int64_t{1} << t);
}
BENCHMARK(BM_WalshTransform)->DenseRange(8, 16, 2)->Complexity(benchmark::oNLogN);

void BM_RhoEval(benchmark::State& state) {
  GroupSpec spec({static_cast<std::uint32_t>(state.range(0))});
  auto d = SubsetMask::full(spec.order());
  const UnityPoint xi = unity_point_at(spec, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rho_eval(spec, d, xi));
}
BENCHMARK(BM_RhoEval)->Arg(7)->Arg(12)->Arg(60);

void BM_EnumerateDifferenceSets(benchmark::State& state) {
  GroupSpec spec(std::vector<std::uint32_t>(static_cast<std::size_t>(state.range(0)), 2));
  const std::uint64_t v = spec.order();
  const DSParams params(v, v - 1, v - 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_difference_sets(spec, params).count);
}
BENCHMARK(BM_EnumerateDifferenceSets)->Arg(3)->Arg(4);

void BM_CheckCCondition(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  std::vector<unsigned> top;
  for (unsigned i = 2; i <= m; ++i) top.push_back(i);
  const CarletSpec spec(m, AnfPoly{{top}}, SubspaceSpec::coordinate_span(m, 3, m));
  for (auto _ : state) benchmark::DoNotOptimize(check_c_condition(spec).holds);
}
BENCHMARK(BM_CheckCCondition)->DenseRange(4, 12, 2);

void BM_BuildCarletTable(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const CarletSpec spec(m, AnfPoly{{{2, 3}}}, SubspaceSpec::coordinate_span(m, 2, m));
  for (auto _ : state) benchmark::DoNotOptimize(build_f(spec));
}
BENCHMARK(BM_BuildCarletTable)->DenseRange(3, 8, 1);

void BM_HilbertCount(benchmark::State& state) {
  GroupSpec spec({2, 2});
  const DSParams params(4, 3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_difference_sets_hilbert(spec, params));
}
BENCHMARK(BM_HilbertCount);

void BM_Buchberger8(benchmark::State& state) {
  GroupSpec spec({2, 2, 2});
  const DSParams params(8, 7, 6);
  auto gens = build_generators(spec, params);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens).generators.size());
}
BENCHMARK(BM_Buchberger8);

}  // namespace

BENCHMARK_MAIN();
