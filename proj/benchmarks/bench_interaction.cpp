#include <benchmark/benchmark.h>

#include <random>

#include "structnet/dataset.hpp"
#include "structnet/feature_graph.hpp"
#include "structnet/info_theory.hpp"

using namespace structnet;

namespace {

FeatureMatrix make_features(int samples, int features, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    FeatureMatrix m;
    m.values.resize(samples, features);
    for (int r = 0; r < samples; ++r)
        for (int c = 0; c < features; ++c) m.values(r, c) = normal(rng);
    for (int c = 0; c < features; ++c) m.feature_names.push_back("f" + std::to_string(c));
    return m;
}

Target make_target(int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    Target t;
    t.kind = TargetKind::Continuous;
    t.continuous_values.resize(samples);
    for (int a = 0; a < samples; ++a) t.continuous_values[a] = normal(rng);
    return t;
}

} // namespace

static void BM_BuildFeatureGraph(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    FeatureMatrix data = make_features(m, 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_feature_graph(data.values.col(0)));
    state.SetComplexityN(m);
}
BENCHMARK(BM_BuildFeatureGraph)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_VertexStrengthDistribution(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    FeatureMatrix data = make_features(m, 1, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(vertex_strength_distribution(data.values.col(0)));
    state.SetComplexityN(m);
}
BENCHMARK(BM_VertexStrengthDistribution)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

static void BM_Jsd(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    FeatureMatrix data = make_features(m, 2, 3);
    Eigen::VectorXd p = vertex_strength_distribution(data.values.col(0));
    Eigen::VectorXd q = vertex_strength_distribution(data.values.col(1));
    for (auto _ : state) benchmark::DoNotOptimize(jsd(p, q));
    state.SetComplexityN(m);
}
BENCHMARK(BM_Jsd)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_BuildInteractionMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FeatureMatrix data = make_features(100, n, 4);
    Target target = make_target(100, 5);
    InteractionOptions options;
    options.warn_if_unstandardized = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(build_interaction_matrix(data, target, options));
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildInteractionMatrix)->RangeMultiplier(2)->Range(8, 128)->Complexity();

BENCHMARK_MAIN();
