// Microbenchmarks for the four hot paths: perfect-matching enumeration,
// symbolic determinant expansion, the colorability search, and the exact
// Kalman rank test.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include <cpmat/cpmat.hpp>

namespace {

using namespace cpmat;

// The worked 5-state pattern and its diagonally-perturbed companion; both
// are realistic mixed solid/free inputs for the colorability search.
constexpr const char* kCompositeText =
    "dims 5 7 5\n"
    "0 0 c1 0 0 c1 0\n"
    "0 g2 0 c2 g1 c2 c1\n"
    "c1 0 g2 0 0 0 0\n"
    "g1 g1 c1 c1 0 0 0\n"
    "c2 c2 0 0 0 0 0\n";

/// Dense t x t pattern cycling through `stars` solid classes: the worst case
/// for matching enumeration (every permutation is a perfect matching).
ColoredPatternMatrix dense_square(std::size_t t, int stars) {
    std::vector<Cell> cells(t * t);
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = ColorId{ColorKind::Star, static_cast<int>(i % stars) + 1};
    return ColoredPatternMatrix::from_cells_renumbered(t, t, std::move(cells)).first;
}

void BM_EnumerateMatchings(benchmark::State& state) {
    const std::size_t t = static_cast<std::size_t>(state.range(0));
    ColoredPatternMatrix m = dense_square(t, 3);
    ColoredBipartiteGraph g = build_bipartite(m);
    for (auto _ : state) {
        auto matchings = enumerate_perfect_matchings(g, {});
        benchmark::DoNotOptimize(matchings);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_EnumerateMatchings)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_SymbolicDeterminant(benchmark::State& state) {
    const std::size_t t = static_cast<std::size_t>(state.range(0));
    ColoredPatternMatrix m = dense_square(t, 3);
    for (auto _ : state) {
        ColorPolynomial det = symbolic_determinant(m);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_SymbolicDeterminant)->Arg(4)->Arg(5)->Arg(6);

void BM_ClassNonsingularity(benchmark::State& state) {
    const std::size_t t = static_cast<std::size_t>(state.range(0));
    ColoredPatternMatrix m = dense_square(t, 3);
    for (auto _ : state) {
        NonsingularityCertificate cert = is_nonsingular(m, {});
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_ClassNonsingularity)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_ColorabilityComposite(benchmark::State& state) {
    ColoredPatternMatrix m = ColoredPatternMatrix::parse(kCompositeText);
    for (auto _ : state) {
        ColorableResult result = is_colorable(m, {});
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ColorabilityComposite);

void BM_ColorabilityCompanion(benchmark::State& state) {
    ColoredSystem sys = ColoredSystem::parse(kCompositeText);
    ColoredPatternMatrix barred = build_barred(sys).system.matrix;
    for (auto _ : state) {
        ColorableResult result = is_colorable(barred, {});
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ColorabilityCompanion);

void BM_ControllabilityVerdict(benchmark::State& state) {
    ColoredSystem sys = ColoredSystem::parse(kCompositeText);
    for (auto _ : state) {
        ControllabilityVerdict verdict = check_controllability(sys);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_ControllabilityVerdict);

void BM_KalmanRank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    RationalMatrix a(n, n);
    RationalMatrix b(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = Rational(static_cast<long>(draw_below(rng, 19)) - 9);
        b.at(i, 0) = Rational(static_cast<long>(draw_below(rng, 19)) - 9);
    }
    for (auto _ : state) {
        bool controllable = kalman_controllable(a, b);
        benchmark::DoNotOptimize(controllable);
    }
}
BENCHMARK(BM_KalmanRank)->Arg(3)->Arg(6)->Arg(9)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
