#include <benchmark/benchmark.h>

#include "lorq/causality.hpp"
#include "lorq/example4d.hpp"
#include "lorq/group.hpp"
#include "lorq/sampling.hpp"
#include "lorq/space.hpp"

namespace {

using namespace lorq;

QuadraticSpace bench_space(int n) {
    Mat g(n, n);
    g.at(0, n - 1) = 1;
    g.at(n - 1, 0) = 1;
    for (int i = 1; i < n - 1; ++i) g.at(i, i) = -1;
    Vec sel = zero_vec(n);
    sel[0] = 1;
    sel[static_cast<size_t>(n - 1)] = 1;
    return QuadraticSpace::create(std::move(g), std::move(sel));
}

void bm_restricted_signature(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    QuadraticSpace sp = bench_space(n);
    Sampler sampler(42);
    std::vector<Vec> basis;
    for (int i = 0; i < n - 1; ++i) basis.push_back(sampler.vec(n, 6, 4));
    Subspace sub = Subspace::spanning(basis);
    for (auto _ : state) {
        Signature s = restricted_signature(sp, sub);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_restricted_signature)->Arg(6)->Arg(10)->Arg(12);

void bm_freeness_check(benchmark::State& state) {
    example4d::Example ex = example4d::build();
    for (auto _ : state) {
        FreenessReport fr = freeness_check(ex.spec);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(bm_freeness_check);

void bm_chronology_query(benchmark::State& state) {
    example4d::Example ex = example4d::build();
    Vec u{Rat(0), Rat(0), Rat(0), Rat(1)};
    Vec v{Rat(0), Rat(1), Rat(-1), Rat(-1)};
    for (auto _ : state) {
        ChronologyAnswer ans = chronology_query(ex.spec, u, v, Orientation::Past);
        benchmark::DoNotOptimize(ans);
    }
}
BENCHMARK(bm_chronology_query);

void bm_word_ball(benchmark::State& state) {
    example4d::Example ex = example4d::build();
    int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WordBallReport report = word_ball_causality(ex.group, radius);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(bm_word_ball)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
