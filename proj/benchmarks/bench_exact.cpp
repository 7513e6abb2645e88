#include "liegrade/abelian.hpp"
#include "liegrade/cyclotomic.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace liegrade;

namespace {

Cyc random_cyc(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    std::array<Rat, Cyc::kDegree> c;
    for (auto& r : c)
        r = Rat(num(rng), den(rng));
    return Cyc::from_coords(c);
}

}  // namespace

static void BM_CycMul(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    Cyc a = random_cyc(rng), b = random_cyc(rng);
    for (auto _ : state) {
        Cyc c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycMul);

static void BM_CycMulRationalFastPath(benchmark::State& state)
{
    Cyc a(Rat(3, 7));
    std::mt19937_64 rng(2);
    Cyc b = random_cyc(rng);
    for (auto _ : state) {
        Cyc c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycMulRationalFastPath);

static void BM_CycInverse(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    Cyc a = random_cyc(rng);
    if (a.is_zero())
        a = Cyc(1);
    for (auto _ : state) {
        Cyc c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycInverse);

static void BM_SmithNormalForm(benchmark::State& state)
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> entry(-20, 20);
    int n = static_cast<int>(state.range(0));
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = entry(rng);
    for (auto _ : state) {
        SmithDecomposition d = smith_normal_form(a);
        benchmark::DoNotOptimize(d.rank);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_Perp(benchmark::State& state)
{
    AbelianGroup g(0, {12, 12, 4});
    Subgroup s(g, {Elt{2, 3, 0}, Elt{0, 6, 2}});
    for (auto _ : state) {
        Subgroup p = perp(s);
        benchmark::DoNotOptimize(p.generators().size());
    }
}
BENCHMARK(BM_Perp);
