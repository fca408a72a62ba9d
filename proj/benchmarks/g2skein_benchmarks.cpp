#include <benchmark/benchmark.h>

#include "g2skein/askey_wilson/verify.hpp"
#include "g2skein/exact/modular.hpp"
#include "g2skein/qops/library.hpp"
#include "g2skein/skein/skein.hpp"

namespace {

using namespace g2skein;
using exact::RationalExpr;
using exact::Var;

void BM_RationalSum(benchmark::State& state) {
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  for (auto _ : state) {
    RationalExpr sum;
    for (int k = 0; k < state.range(0); ++k) sum += RationalExpr(1) / (RationalExpr(1) - RationalExpr::q_quarter(4 * k + 2) * x0);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_RationalSum)->Arg(4)->Arg(8)->Arg(16);

void BM_AWGeneralSymbolic(benchmark::State& state) {
  const auto p = askey_wilson::AWParams::symbolic();
  for (auto _ : state) benchmark::DoNotOptimize(askey_wilson::aw_general(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_AWGeneralSymbolic)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BuildCurveOperator(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qops::build_curve(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildCurveOperator)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_ApplyK3ToPn(benchmark::State& state) {
  const auto A = qops::build_curve(3);
  const auto& P = askey_wilson::aw_star(static_cast<int>(state.range(0))).poly;
  for (auto _ : state) benchmark::DoNotOptimize(A.apply(P));
}
BENCHMARK(BM_ApplyK3ToPn)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_PropAction(benchmark::State& state) {
  auto cmp = check::Comparator::exact();
  askey_wilson::aw_star(4);
  for (auto _ : state) benchmark::DoNotOptimize(askey_wilson::verify_prop_action(6, static_cast<int>(state.range(0)), cmp));
}
BENCHMARK(BM_PropAction)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CorrespondenceSweep(benchmark::State& state) {
  auto cmp = check::Comparator::exact();
  const auto triples = skein::enumerate_admissible(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& t : triples)
      for (int k = 1; k <= 6; ++k) benchmark::DoNotOptimize(skein::correspondence_check(k, t, cmp));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(triples.size()) * 6);
}
BENCHMARK(BM_CorrespondenceSweep)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RandomVsExactCompare(benchmark::State& state) {
  const auto& P = askey_wilson::aw_star(4).poly;
  const RationalExpr lhs = qops::build_curve(3).apply(P);
  auto cmp = state.range(0) == 0 ? check::Comparator::exact() : check::Comparator::random(exact::modular::default_prime(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cmp.equal(lhs, lhs * RationalExpr(1)));
  state.SetLabel(state.range(0) == 0 ? "exact" : "random");
}
BENCHMARK(BM_RandomVsExactCompare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
