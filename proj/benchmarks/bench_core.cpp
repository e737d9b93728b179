#include <benchmark/benchmark.h>

#include "sv/algebra.hpp"
#include "sv/extension.hpp"
#include "sv/forms.hpp"

using namespace sv;

namespace {

void BM_BracketBasisPairs(benchmark::State& state) {
    const Window w(static_cast<long long>(state.range(0)));
    const auto basis = basis_in_window(w);
    for (auto _ : state) {
        for (const auto& x : basis)
            for (const auto& y : basis) benchmark::DoNotOptimize(bracket(x, y));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(basis.size() * basis.size()));
}
BENCHMARK(BM_BracketBasisPairs)->Arg(8)->Arg(16);

void BM_JacobiWindow(benchmark::State& state) {
    const Window w(static_cast<long long>(state.range(0)));
    for (auto _ : state) {
        CheckReport rep = jacobi_check(w);
        benchmark::DoNotOptimize(rep.passed);
    }
}
BENCHMARK(BM_JacobiWindow)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GramLevel(benchmark::State& state) {
    const long long depth = state.range(0);
    const auto p = InvolutionParams::plus(GaussRat(1), GaussRat(0), GaussRat(1));
    const Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
    for (auto _ : state) {
        Mat g = gram(wt, p, depth, depth);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_GramLevel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ExtensionNullspace(benchmark::State& state) {
    ExtensionConfig cfg{Rat(1, 4),
                        {GaussRat(Rat(1, 2), Rat(1))},
                        {GaussRat(Rat(1, 2), Rat(1))},
                        state.range(0),
                        0};
    for (auto _ : state) {
        auto basis = nullspace(assemble_constraints(cfg));
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(BM_ExtensionNullspace)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Positivity(benchmark::State& state) {
    const auto p = InvolutionParams::plus(GaussRat(1), GaussRat(0), GaussRat(1));
    const Weight wt{Rat(-1), Rat(1, 2), Rat(2)};
    const long long depth = state.range(0);
    Mat g = gram(wt, p, depth, depth);
    for (auto _ : state) {
        PositivityVerdict v = positivity(g);
        benchmark::DoNotOptimize(v.tag);
    }
}
BENCHMARK(BM_Positivity)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
