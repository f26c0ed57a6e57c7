#include <benchmark/benchmark.h>

#include <random>

#include "gkit/canonical.hpp"
#include "gkit/complex.hpp"
#include "gkit/enumerate.hpp"
#include "gkit/gorenstein.hpp"
#include "gkit/homology.hpp"
#include "gkit/independence.hpp"

namespace {

gkit::Graph random_graph(unsigned seed, int n, double p) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(p);
    gkit::Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

void BM_IndependentSetCounts(benchmark::State& state) {
    const gkit::Graph g = random_graph(7, static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(gkit::independent_set_counts(g));
}
BENCHMARK(BM_IndependentSetCounts)->Arg(12)->Arg(20)->Arg(32);

void BM_CanonicalForm(benchmark::State& state) {
    const gkit::Graph g = random_graph(11, static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(gkit::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalFormCycle(benchmark::State& state) {
    const gkit::Graph g = gkit::cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gkit::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormCycle)->Arg(12)->Arg(16);

void BM_RationalRank(benchmark::State& state) {
    const gkit::SimplicialComplex c = gkit::independence_complex(random_graph(13, 12, 0.35));
    const gkit::IntMatrix m = gkit::boundary_matrix(c, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gkit::rank_over(m, gkit::FieldSpec::rationals()));
}
BENCHMARK(BM_RationalRank);

void BM_GorensteinCheck(benchmark::State& state) {
    const gkit::Graph g = gkit::cycle_complement(static_cast<int>(state.range(0)));
    const gkit::FieldSpec f2 = gkit::FieldSpec::prime(2);
    for (auto _ : state) benchmark::DoNotOptimize(gkit::check_gorenstein_theorem(g, f2));
}
BENCHMARK(BM_GorensteinCheck)->Arg(8)->Arg(12);

void BM_W2Definition(benchmark::State& state) {
    const gkit::Graph g = gkit::figure1_graphs()[2];
    for (auto _ : state) benchmark::DoNotOptimize(gkit::is_w2_definition(g));
}
BENCHMARK(BM_W2Definition);

void BM_TriangleFreeSweep(benchmark::State& state) {
    gkit::SearchSpec spec;
    spec.n_min = 1;
    spec.n_max = static_cast<int>(state.range(0));
    spec.triangle_free = true;
    for (auto _ : state) {
        long count = 0;
        gkit::generate(spec, [&count](const gkit::Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_TriangleFreeSweep)->Arg(7)->Arg(8);

} // namespace

BENCHMARK_MAIN();
