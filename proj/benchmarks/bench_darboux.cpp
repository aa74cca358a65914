#include "darboux/corpus.hpp"
#include "darboux/derivation.hpp"
#include "darboux/engine.hpp"
#include "darboux/polytope.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace darboux;

static std::vector<LatticePoint> random_points(std::size_t n, int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coord(-8, 8);
    std::vector<LatticePoint> pts;
    for (int i = 0; i < count; ++i) {
        LatticePoint p(n);
        for (auto& x : p) x = coord(rng);
        pts.push_back(p);
    }
    return pts;
}

static void BM_ConvexHull(benchmark::State& state) {
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Args({2, 20})->Args({2, 80})->Args({3, 20})->Args({3, 60});

static void BM_BoundsReportDense(benchmark::State& state) {
    const System s = gen_dense(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(bounds_report(s.derivation));
}
BENCHMARK(BM_BoundsReportDense)->Args({2, 6})->Args({3, 3})->Args({3, 4});

static void BM_BoundsReportFigure(benchmark::State& state) {
    const System s = gen_figure_family(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bounds_report(s.derivation));
}
BENCHMARK(BM_BoundsReportFigure)->Arg(3)->Arg(6)->Arg(12);

static std::vector<DarbouxPair> optimality_pairs(const System& s) {
    std::vector<DarbouxPair> pairs;
    for (const auto& f : *s.candidates) pairs.push_back(*cofactor(s.derivation, f));
    return pairs;
}

static void BM_RelationSpaceK(benchmark::State& state) {
    std::vector<Rational> roots;
    for (long j = 0; j < state.range(0); ++j) roots.emplace_back(j);
    const System s = gen_optimality_family(roots, 3);
    const auto pairs = optimality_pairs(s);
    const IntPolytope nd = support_polytope(s.derivation);
    for (auto _ : state) benchmark::DoNotOptimize(relation_space_K(pairs, nd));
}
BENCHMARK(BM_RelationSpaceK)->Arg(3)->Arg(6);

static void BM_RelationSpaceQ(benchmark::State& state) {
    std::vector<Rational> roots;
    for (long j = 0; j < state.range(0); ++j) roots.emplace_back(j);
    const System s = gen_optimality_family(roots, 3);
    const auto pairs = optimality_pairs(s);
    const IntPolytope nd = support_polytope(s.derivation);
    for (auto _ : state) benchmark::DoNotOptimize(relation_space_Q(pairs, nd));
}
BENCHMARK(BM_RelationSpaceQ)->Arg(3)->Arg(6);
BENCHMARK_MAIN();
