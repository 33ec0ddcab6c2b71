#include "lipnorm/extension.hpp"
#include "lipnorm/extremes.hpp"
#include "lipnorm/measures.hpp"
#include "lipnorm/polytope.hpp"
#include "lipnorm/random.hpp"

#include <benchmark/benchmark.h>

using namespace lipnorm;

namespace {

MetricSpace space_of(std::size_t n) {
    random::Engine rng(17 + n);
    return random::metric_space(rng, n);
}

void BM_EnumerateBallVertices(benchmark::State& state) {
    const MetricSpace space = space_of(static_cast<std::size_t>(state.range(0)));
    const BallKind kind = state.range(1) == 0 ? BallKind::BL : BallKind::FM;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_extremes(space, kind));
}
BENCHMARK(BM_EnumerateBallVertices)->ArgsProduct({{2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LpMax(benchmark::State& state) {
    const MetricSpace space = space_of(static_cast<std::size_t>(state.range(0)));
    const HPolytope ball = ball_constraints(space, BallKind::BL);
    random::Engine rng(5);
    Vector c(space.size());
    for (auto& v : c) v = random::rational(rng, -3, 3, 5);
    for (auto _ : state) benchmark::DoNotOptimize(lp_max(ball, c));
}
BENCHMARK(BM_LpMax)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_DualNorm(benchmark::State& state) {
    const MetricSpace space = space_of(static_cast<std::size_t>(state.range(0)));
    random::Engine rng(9);
    const MolecularMeasure mu = random::measure(rng, space);
    for (auto _ : state) benchmark::DoNotOptimize(dual_norm(mu, BallKind::FM));
}
BENCHMARK(BM_DualNorm)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_TietzeExtend(benchmark::State& state) {
    const MetricSpace space = space_of(static_cast<std::size_t>(state.range(0)));
    random::Engine rng(3);
    const PointSubset p = random::subset(rng, space);
    const LipFunction f = random::function(rng, induced_subspace(p));
    const ExtensionProblem problem(p, f);
    for (auto _ : state) benchmark::DoNotOptimize(tietze_extend(problem));
}
BENCHMARK(BM_TietzeExtend)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
