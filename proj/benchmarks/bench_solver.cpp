#include <benchmark/benchmark.h>

#include <random>

#include "structnet/solver.hpp"

using namespace structnet;

namespace {

struct Problem {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
};

Problem make_problem(int n, int m, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    Problem p;
    p.x.resize(n, m);
    p.y.resize(m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) p.x(r, c) = normal(rng);
    for (int c = 0; c < m; ++c) p.y[c] = normal(rng);
    return p;
}

SolverConfig fixed_iteration_config(int iterations) {
    SolverConfig cfg;
    cfg.max_iter = iterations;
    cfg.eps_abs = 1e-300;
    cfg.eps_rel = 1e-300;
    return cfg;
}

} // namespace

static void BM_Precompute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Problem p = make_problem(n, 200, 11);
    SolverConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(precompute(p.x, p.y, nullptr, cfg));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Precompute)->RangeMultiplier(2)->Range(8, 256)->Complexity();

// one hundred ADMM iterations on a cached factorization
static void BM_SolveIterations(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Problem p = make_problem(n, 200, 12);
    SolverConfig cfg = fixed_iteration_config(100);
    FactoredSystem sys = precompute(p.x, p.y, nullptr, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
    state.SetComplexityN(n);
}
BENCHMARK(BM_SolveIterations)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_SolveLassoToConvergence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Problem p = make_problem(n, 200, 13);
    SolverConfig cfg;
    cfg.lambda1 = 0.5;
    cfg.lambda2 = 0.0;
    cfg.lambda3 = 0.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_baseline(BaselineKind::Lasso, p.x, p.y, cfg));
    state.SetComplexityN(n);
}
BENCHMARK(BM_SolveLassoToConvergence)->RangeMultiplier(2)->Range(8, 128)->Complexity();

BENCHMARK_MAIN();
