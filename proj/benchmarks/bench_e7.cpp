#include "liegrade/e7_model.hpp"

#include <benchmark/benchmark.h>

using namespace liegrade;

namespace {

const E7Model& model()
{
    static const E7Model m;
    return m;
}

}  // namespace

static void BM_E7Construction(benchmark::State& state)
{
    for (auto _ : state) {
        E7Model m;
        benchmark::DoNotOptimize(m.algebra().dim());
    }
}
BENCHMARK(BM_E7Construction)->Unit(benchmark::kMillisecond);

static void BM_E7WedgeBracket(benchmark::State& state)
{
    const LieAlgebra& l = model().algebra();
    SVec u = {{63, Cyc(1)}, {80, Cyc(2)}, {101, Cyc(-1)}};
    SVec v = {{70, Cyc(1)}, {132, Cyc(3)}};
    for (auto _ : state) {
        SVec w = l.bracket(u, v);
        benchmark::DoNotOptimize(w.size());
    }
}
BENCHMARK(BM_E7WedgeBracket);

static void BM_E7JacobiSweep(benchmark::State& state)
{
    const LieAlgebra& l = model().algebra();
    for (auto _ : state) {
        auto fail = l.check_jacobi(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(fail.has_value());
    }
}
BENCHMARK(BM_E7JacobiSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_E7AdMatrix(benchmark::State& state)
{
    const LieAlgebra& l = model().algebra();
    SVec x;
    for (int i = 0; i < l.dim(); i += 3)
        x.emplace_back(i, Cyc(1 + (i % 5)));
    for (auto _ : state) {
        Mat<Cyc> ad = l.ad(x);
        benchmark::DoNotOptimize(ad.rows());
    }
}
BENCHMARK(BM_E7AdMatrix)->Unit(benchmark::kMillisecond);
