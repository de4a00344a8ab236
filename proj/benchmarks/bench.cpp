#include <benchmark/benchmark.h>

#include "gridfloer/action.hpp"
#include "gridfloer/corpus.hpp"

namespace {

using namespace gridfloer;

// Torus-knot style grid: X on the diagonal, O shifted by two.
GridDiagram shifted_grid(int n) {
    GridDiagram g;
    g.n = n;
    g.o_rows.resize(n);
    g.x_rows.resize(n);
    for (int j = 0; j < n; ++j) {
        g.x_rows[j] = j;
        g.o_rows[j] = (j + 2) % n;
    }
    return g;
}

void bm_tilde_homology(benchmark::State& state) {
    GridDiagram g = shifted_grid((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tilde_homology(g).total());
}
BENCHMARK(bm_tilde_homology)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_build_complex(benchmark::State& state) {
    GridDiagram g = shifted_grid((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(g).states.size());
}
BENCHMARK(bm_build_complex)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_homology_action(benchmark::State& state) {
    GridDiagram g = corpus_grid("hopf-disjoint-unknot");
    for (auto _ : state) benchmark::DoNotOptimize(homology_action(g, 0, 1, {}).rank);
}
BENCHMARK(bm_homology_action)->Unit(benchmark::kMillisecond);

void bm_l6a2_detect_pipeline(benchmark::State& state) {
    GridDiagram g = corpus_grid("l6a2");
    for (auto _ : state)
        benchmark::DoNotOptimize(hat_ranks(tilde_homology(g)).total());
}
BENCHMARK(bm_l6a2_detect_pipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
