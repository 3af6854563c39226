#include <benchmark/benchmark.h>

#include <modhom/canonical.hpp>
#include <modhom/check.hpp>
#include <modhom/enumerate.hpp>
#include <modhom/hom.hpp>
#include <modhom/semiring.hpp>
#include <modhom/transforms.hpp>

using namespace modhom;

namespace {

Signature bench_sig() { return make_signature({"p"}, {"R"}); }

PointedStructure dense_target(int n, std::uint64_t seed) {
    RandomParams params;
    params.num_states = n;
    params.edge_density = 0.4;
    return random_structure(ClassTag::Connected, bench_sig(), params, seed);
}

} // namespace

static void BM_HomCountTreeIntoClique(benchmark::State& state) {
    auto sig = bench_sig();
    auto slice = enumerate_class(ClassTag::Tree, sig, 5, 4);
    auto clique = make_clique(sig, static_cast<int>(state.range(0)), true);
    for (auto _ : state) {
        BigCount total = 0;
        for (const auto& tree : slice.structures) total += count_hom_maps(tree, clique);
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(slice.structures.size()));
}
BENCHMARK(BM_HomCountTreeIntoClique)->Arg(2)->Arg(4)->Arg(8);

static void BM_HomCountCyclicSource(benchmark::State& state) {
    auto source = dense_target(static_cast<int>(state.range(0)), 11);
    auto target = dense_target(6, 23);
    for (auto _ : state) {
        auto c = count_hom_maps(source, target);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_HomCountCyclicSource)->Arg(4)->Arg(6)->Arg(8);

static void BM_CanonicalEncoding(benchmark::State& state) {
    auto m = dense_target(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        auto code = canonical_encoding(m);
        benchmark::DoNotOptimize(code);
    }
}
BENCHMARK(BM_CanonicalEncoding)->Arg(4)->Arg(6)->Arg(8);

static void BM_Unravel(benchmark::State& state) {
    auto m = dense_target(5, 17);
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto u = unravel(m, k);
        auto states = u.num_states();
        benchmark::DoNotOptimize(states);
    }
}
BENCHMARK(BM_Unravel)->Arg(2)->Arg(4)->Arg(6);

static void BM_EnumerateTrees(benchmark::State& state) {
    auto sig = bench_sig();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto slice = enumerate_class(ClassTag::Tree, sig, n, n - 1);
        benchmark::DoNotOptimize(slice.structures.size());
    }
}
BENCHMARK(BM_EnumerateTrees)->Arg(4)->Arg(5)->Arg(6);

static void BM_BisimulationFixpoint(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto m = dense_target(n, 31);
    auto other = dense_target(n, 37);
    for (auto _ : state) {
        auto r = simulation_fixpoint(m, other, SimulationKind::Bisimulation);
        benchmark::DoNotOptimize(r.related);
    }
}
BENCHMARK(BM_BisimulationFixpoint)->Arg(8)->Arg(16)->Arg(32);

static void BM_GradedRefinement(benchmark::State& state) {
    auto sig = bench_sig();
    auto all = enumerate_structures(sig, 3);
    std::vector<const PointedStructure*> batch;
    batch.reserve(all.size());
    for (const auto& m : all) batch.push_back(&m);
    for (auto _ : state) {
        auto classes = graded_refinement_classes(batch, -1);
        benchmark::DoNotOptimize(classes.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.size()));
}
BENCHMARK(BM_GradedRefinement);

static void BM_PeriodicityAnalysis(benchmark::State& state) {
    auto s = Semiring::mod(static_cast<int>(state.range(0)));
    int probe = default_probe(s);
    for (auto _ : state) {
        auto rep = analyze_periodicity(s, probe);
        benchmark::DoNotOptimize(rep.period);
    }
}
BENCHMARK(BM_PeriodicityAnalysis)->Arg(3)->Arg(7);

BENCHMARK_MAIN();
