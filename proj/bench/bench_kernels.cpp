// Serial reference vs OpenMP kernels on the sums that dominate evaluation.

#include <benchmark/benchmark.h>

#include "plab/detail/special.hpp"
#include "plab/kronecker.hpp"
#include "plab/parallel.hpp"
#include "plab/periodfn.hpp"

using namespace plab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

// Head of the frak_F1 series: sum of digamma remainders over n x.
void BM_digamma_head(benchmark::State& state) {
  const EvalContext ctx(40);
  PrecisionScope scope(ctx);
  const Real x("0.37");
  const double thr = ctx.asymptotic_threshold();
  for (auto _ : state) {
    Real s = sum_terms<Real>(
        1, 4001, [&](long n) { return detail::digamma_remainder(Real(x * n), thr); }, exec_of(state));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_digamma_head)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_F1(benchmark::State& state) {
  const EvalContext ctx = EvalContext(60).with_exec(exec_of(state));
  const Real x("0.013");
  for (auto _ : state) benchmark::DoNotOptimize(F1(x, ctx));
}
BENCHMARK(BM_F1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_table_cell(benchmark::State& state) {
  const EvalContext ctx = EvalContext(40).with_exec(exec_of(state));
  const auto classes = sqrt3_classes();
  for (auto _ : state) benchmark::DoNotOptimize(partial_zeta(4, classes[1], ctx));
}
BENCHMARK(BM_table_cell)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
