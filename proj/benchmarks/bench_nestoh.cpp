#include <cstdint>

#include <benchmark/benchmark.h>

#include "nestoh/btrees.hpp"
#include "nestoh/building_set.hpp"
#include "nestoh/families.hpp"
#include "nestoh/graphs.hpp"
#include "nestoh/posets.hpp"
#include "nestoh/verify.hpp"

namespace {

void BM_EnumeratePermutohedron(benchmark::State& state) {
  const nestoh::BuildingSet b =
      nestoh::BuildingSet::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    nestoh::for_each_btree(b, [&](const nestoh::BTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePermutohedron)->Arg(5)->Arg(6)->Arg(7);

void BM_EnumerateAssociahedron(benchmark::State& state) {
  const nestoh::BuildingSet b =
      nestoh::BuildingSet::path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    nestoh::for_each_btree(b, [&](const nestoh::BTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAssociahedron)->Arg(8)->Arg(9)->Arg(10);

void BM_TrivariateStar(benchmark::State& state) {
  const nestoh::BuildingSet b =
      nestoh::BuildingSet::star(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    nestoh::Polynomial h = nestoh::h_polynomial(b, nestoh::HVars::tqu);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_TrivariateStar)->Arg(5)->Arg(6)->Arg(7);

void BM_EulerMahonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    nestoh::Polynomial p = nestoh::euler_mahonian(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_EulerMahonian)->Arg(6)->Arg(7)->Arg(8);

void BM_PolynomialMultiply(benchmark::State& state) {
  const nestoh::Polynomial a = nestoh::euler_mahonian(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    nestoh::Polynomial p = a * a;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolynomialMultiply)->Arg(6)->Arg(8);

void BM_SnkClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    nestoh::Polynomial p = nestoh::snk_closed_form(n, n / 2);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SnkClosedForm)->Arg(8)->Arg(10)->Arg(12);

void BM_MaximalTubings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  const nestoh::Graph g(n, std::move(edges));
  for (auto _ : state) {
    std::uint64_t count = 0;
    nestoh::for_each_maximal_tubing(
        g, [&](const nestoh::Tubing&, const nestoh::BTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_MaximalTubings)->Arg(5)->Arg(6);

void BM_VerifyAllSuites(benchmark::State& state) {
  nestoh::VerifyOptions opts;
  opts.max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    nestoh::VerifyReport report = nestoh::run_verify(opts);
    bool ok = report.all_ok();
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_VerifyAllSuites)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
