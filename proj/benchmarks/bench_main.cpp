#include <benchmark/benchmark.h>

#include "spincalc/bn/evaluate.hpp"
#include "spincalc/bn/harris_tu.hpp"
#include "spincalc/genus12/bundles.hpp"
#include "spincalc/genus12/pipeline.hpp"
#include "spincalc/kernel/matrix.hpp"
#include "spincalc/pic/solve_zg.hpp"
#include "spincalc/ring/element.hpp"

using namespace spincalc;

namespace {

void BM_HarrisTuValue(benchmark::State& state) {
  const bn::BNContext ctx(11, 4, 14);
  const bn::HTQuery q{{1, 1, 1, 1, 1}, 6, true};
  for (auto _ : state) benchmark::DoNotOptimize(bn::ht_value(ctx, q));
}
BENCHMARK(BM_HarrisTuValue);

// Hilbert matrix of size n; det is exact and tiny, so entries grow fast.
void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(1, static_cast<long>(i + j + 1));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_JacobianPower(benchmark::State& state) {
  const bn::BNContext ctx(11, 4, 14);
  const auto& p = ctx.preset();
  const ring::RingElem x = ring::RingElem::generator(p, "eta") + ring::RingElem::generator(p, "gamma") +
                           ring::RingElem::generator(p, "theta") + ring::RingElem::generator(p, "c1") +
                           ring::RingElem::generator(p, "c2");
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ring::pow(x, e));
}
BENCHMARK(BM_JacobianPower)->DenseRange(3, 7, 2);

void BM_EvaluateLocusIntegrand(benchmark::State& state) {
  const auto side = state.range(0) == 0 ? bn::LocusSide::X : bn::LocusSide::Y;
  const ring::RingElem e = genus12::locus_integrand(side);
  for (auto _ : state) benchmark::DoNotOptimize(bn::evaluate_taut(genus12::context(), e, side));
}
BENCHMARK(BM_EvaluateLocusIntegrand)->Arg(0)->Arg(1);

void BM_C3Difference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genus12::c3_difference(bn::LocusSide::X));
}
BENCHMARK(BM_C3Difference);

void BM_SolveZg(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pic::solve_zg(g));
}
BENCHMARK(BM_SolveZg)->Arg(4)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
