#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "structnet/errors.hpp"
#include "structnet/info_theory.hpp"
#include "structnet/solver.hpp"

#include "support/cd_lasso.hpp"
#include "support/random_data.hpp"

using namespace structnet;

namespace {

SolverConfig tight_config() {
    SolverConfig cfg;
    cfg.eps_abs = 1e-10;
    cfg.eps_rel = 1e-8;
    cfg.max_iter = 50000;
    return cfg;
}

Eigen::VectorXd scalar(double v) {
    Eigen::VectorXd out(1);
    out << v;
    return out;
}

} // namespace

TEST_CASE("config validation") {
    SolverConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    SolverConfig bad = cfg;
    bad.lambda1 = -1;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = cfg;
    bad.rho = 0.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = cfg;
    bad.eps_abs = 0.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = cfg;
    bad.max_iter = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("precompute forms the expected system") {
    SolverConfig cfg;
    cfg.lambda2 = 0.0;
    cfg.lambda3 = 0.0;
    cfg.rho = 1.0;

    SUBCASE("scalar case: A = [2]") {
        Eigen::MatrixXd x(1, 1);
        x << 1.0;
        FactoredSystem sys = precompute(x, scalar(2.0), nullptr, cfg);
        CHECK(sys.solve_system(scalar(1.0))[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(sys.xy()[0] == 2.0);
    }
    SUBCASE("identity design with ridge: A = 3I") {
        SolverConfig ridge = cfg;
        ridge.lambda2 = 1.0;
        Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
        Eigen::VectorXd y(2);
        y << 1, 1;
        FactoredSystem sys = precompute(x, y, nullptr, ridge);
        Eigen::VectorXd rhs(2);
        rhs << 3, 3;
        CHECK((sys.solve_system(rhs) - Eigen::VectorXd::Ones(2)).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("huge lambda3 makes A indefinite") {
        std::mt19937 rng(1);
        FeatureMatrix data = testsupport::random_features(rng, 12, 4);
        InteractionOptions options;
        options.warn_if_unstandardized = false;
        InteractionMatrix im = build_interaction_matrix(
            data, testsupport::continuous_target(testsupport::random_vector(rng, 12)), options);
        SolverConfig bad;
        bad.lambda3 = 1e6;
        Eigen::MatrixXd x = data.values.transpose();
        Eigen::VectorXd y = testsupport::random_vector(rng, 12);
        CHECK_THROWS_WITH_AS(precompute(x, y, &im.w, bad),
                             doctest::Contains("increase rho or lambda2, or decrease lambda3"),
                             NotPositiveDefiniteError);
    }
}

TEST_CASE("update_beta solves the cached system") {
    SolverConfig cfg;
    cfg.lambda2 = 0.0;
    cfg.lambda3 = 0.0;
    cfg.rho = 1.0;
    Eigen::MatrixXd x(1, 1);
    x << 1.0;

    FactoredSystem sys = precompute(x, scalar(2.0), nullptr, cfg);
    CHECK(update_beta(sys, scalar(0.0), scalar(0.0))[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(update_beta(sys, scalar(1.0), scalar(0.5))[0] ==
          doctest::Approx(1.25).epsilon(1e-15));

    FactoredSystem zero_rhs = precompute(x, scalar(0.0), nullptr, cfg);
    CHECK(update_beta(zero_rhs, scalar(0.0), scalar(0.0))[0] == 0.0);
}

TEST_CASE("update_gamma soft-thresholding cases") {
    // v = z + rho*beta
    CHECK(update_gamma(scalar(5.0), scalar(0.0), 2.0, 1.0)[0] == 3.0);
    CHECK(update_gamma(scalar(-5.0), scalar(0.0), 2.0, 1.0)[0] == -3.0);
    CHECK(update_gamma(scalar(1.5), scalar(0.0), 2.0, 1.0)[0] == 0.0);
    // lambda1 = 0 passes v/rho through exactly
    CHECK(update_gamma(scalar(1.25), scalar(0.5), 0.0, 2.0)[0] == (0.5 + 2.0 * 1.25) / 2.0);
}

TEST_CASE("update_gamma minimizes its scalar subproblem") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> uniform(-4.0, 4.0);
    std::uniform_real_distribution<double> positive(0.1, 4.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double beta = uniform(rng);
        double z = uniform(rng);
        double lambda1 = positive(rng);
        double rho = positive(rng);
        double gamma = update_gamma(scalar(beta), scalar(z), lambda1, rho)[0];
        auto objective = [&](double g) {
            return lambda1 * std::abs(g) - g * z + 0.5 * rho * (beta - g) * (beta - g);
        };
        double best = objective(gamma);
        double span = std::abs(z + rho * beta) / rho + 1.0;
        for (double g = -span; g <= span; g += 1e-3)
            CHECK(best <= objective(g) + 1e-12);
    }
}

TEST_CASE("update_z examples") {
    Eigen::VectorXd z(1), beta(1), gamma(1);
    z << 0.0;
    beta << 1.0;
    gamma << 1.0;
    CHECK(update_z(z, beta, gamma, 2.0)[0] == 0.0);
    gamma << 0.5;
    CHECK(update_z(z, beta, gamma, 2.0)[0] == 1.0);
    CHECK(update_z(Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3),
                   Eigen::VectorXd::Zero(3), 1.0) == Eigen::VectorXd::Zero(3));
}

TEST_CASE("zero response converges immediately to zero") {
    SolverConfig cfg;
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(3, 3);
    SolverResult result = solve(x, Eigen::VectorXd::Zero(3), nullptr, cfg);
    CHECK(result.converged);
    CHECK(result.iterations == 1);
    CHECK(result.beta_star == Eigen::VectorXd::Zero(3));
}

TEST_CASE("orthonormal-design lasso matches the closed form") {
    SolverConfig cfg;
    cfg.lambda1 = 1.0;
    cfg.lambda2 = 0.0;
    cfg.lambda3 = 0.0;
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd y(2);
    y << 3.0, 0.5;
    SolverResult result = solve(x, y, nullptr, cfg);
    CHECK(result.converged);
    CHECK(result.beta_star[0] == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(result.beta_star[1] == 0.0); // gamma is exactly sparse
}

TEST_CASE("ridge special case matches the direct solve") {
    SolverConfig cfg;
    cfg.lambda1 = 0.0;
    cfg.lambda2 = 1.0;
    cfg.lambda3 = 0.0;
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd y(2);
    y << 1.0, 2.0;
    SolverResult result = solve(x, y, nullptr, cfg);
    CHECK(result.beta_star[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(result.beta_star[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("ridge oracle: random instances match (XX^T + l2 I) beta = Xy") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 19);
        Eigen::Index m = n + 5 + static_cast<Eigen::Index>(rng() % 25);
        Eigen::MatrixXd x = testsupport::random_matrix(rng, n, m);
        Eigen::VectorXd y = testsupport::random_vector(rng, m);

        SolverConfig cfg = tight_config();
        cfg.lambda1 = 0.0;
        cfg.lambda2 = 0.7;
        cfg.lambda3 = 0.0;
        SolverResult admm = solve(x, y, nullptr, cfg);

        Eigen::MatrixXd a = x * x.transpose();
        a.diagonal().array() += cfg.lambda2;
        Eigen::VectorXd direct = a.ldlt().solve(x * y);
        CHECK((admm.beta_star - direct).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("lasso oracle: random instances match coordinate descent") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 19);
        Eigen::Index m = n + 5 + static_cast<Eigen::Index>(rng() % 25);
        Eigen::MatrixXd x = testsupport::random_matrix(rng, n, m);
        Eigen::VectorXd y = testsupport::random_vector(rng, m);

        SolverConfig cfg = tight_config();
        cfg.lambda1 = 0.3;
        cfg.lambda2 = 0.0;
        cfg.lambda3 = 0.0;
        SolverResult admm = solve(x, y, nullptr, cfg);
        Eigen::VectorXd cd = testsupport::cd_lasso(x, y, cfg.lambda1);
        CHECK((admm.beta_star - cd).cwiseAbs().maxCoeff() < 1e-4);
    }
}

TEST_CASE("baseline wrappers force the right penalties") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd y(2);
    y << 3.0, 0.5;

    SolverConfig cfg;
    cfg.lambda1 = 1.0;
    cfg.lambda2 = 5.0; // ignored by the lasso wrapper
    cfg.lambda3 = 9.0; // ignored by every wrapper
    SolverResult lasso = solve_baseline(BaselineKind::Lasso, x, y, cfg);
    CHECK(lasso.beta_star[0] == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(lasso.beta_star[1] == 0.0);

    SolverConfig en = cfg;
    en.lambda1 = 0.0;
    en.lambda2 = 1.0;
    SolverResult elastic = solve_baseline(BaselineKind::ElasticNet, x, y, en);
    SolverResult ridge = solve_baseline(BaselineKind::Ridge, x, y, en);
    CHECK(elastic.beta_star == ridge.beta_star); // identical parameter set, identical path
}

TEST_CASE("lasso baseline agrees with coordinate descent on a 5x20 problem") {
    std::mt19937 rng(67);
    Eigen::MatrixXd x = testsupport::random_matrix(rng, 5, 20);
    Eigen::VectorXd y = testsupport::random_vector(rng, 20);
    SolverConfig cfg = tight_config();
    cfg.lambda1 = 0.5;
    SolverResult admm = solve_baseline(BaselineKind::Lasso, x, y, cfg);
    Eigen::VectorXd cd = testsupport::cd_lasso(x, y, cfg.lambda1);
    CHECK((admm.beta_star - cd).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("KKT report is consistent at convergence on full instances") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::Index m = 20 + static_cast<Eigen::Index>(rng() % 20);
        Eigen::Index n = 3 + static_cast<Eigen::Index>(rng() % 10);
        FeatureMatrix data = testsupport::random_features(rng, m, n);
        Target target = testsupport::continuous_target(testsupport::random_vector(rng, m));
        InteractionOptions options;
        options.warn_if_unstandardized = false;
        InteractionMatrix im = build_interaction_matrix(data, target, options);

        SolverConfig cfg;
        cfg.lambda1 = 0.2;
        cfg.lambda2 = 1.0;
        // keep A positive definite: 2*lambda3*max_row_sum(W) < lambda2 + rho
        double bound = im.w.cwiseAbs().rowwise().sum().maxCoeff();
        cfg.lambda3 = 0.25 * (cfg.lambda2 + cfg.rho) / (2.0 * bound);

        Eigen::MatrixXd x = data.values.transpose();
        SolverResult result = solve(x, target.continuous_values, &im.w, cfg);
        REQUIRE(result.converged);
        double xy_scale = 1.0 + (x * target.continuous_values).cwiseAbs().maxCoeff();
        CHECK(result.kkt.stationarity_gap <=
              10.0 * std::max(cfg.eps_abs, cfg.eps_rel) * xy_scale);
        CHECK(result.kkt.dual_feasibility_gap <= 1e-6);
    }
}

TEST_CASE("solver is deterministic") {
    std::mt19937 rng(73);
    Eigen::MatrixXd x = testsupport::random_matrix(rng, 8, 30);
    Eigen::VectorXd y = testsupport::random_vector(rng, 30);
    SolverConfig cfg;
    SolverResult a = solve(x, y, nullptr, cfg);
    SolverResult b = solve(x, y, nullptr, cfg);
    CHECK(a.beta_star == b.beta_star);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective_value == b.objective_value);
}

TEST_CASE("iteration cap returns the best state without converging") {
    std::mt19937 rng(79);
    Eigen::MatrixXd x = testsupport::random_matrix(rng, 6, 20);
    Eigen::VectorXd y = testsupport::random_vector(rng, 20);
    SolverConfig cfg;
    cfg.max_iter = 1;
    SolverResult result = solve(x, y, nullptr, cfg);
    CHECK_FALSE(result.converged);
    CHECK(result.iterations == 1);
    CHECK(result.beta_star.size() == 6);
}

TEST_CASE("a factored system can be shared across concurrent solves") {
    std::mt19937 rng(81);
    Eigen::MatrixXd x = testsupport::random_matrix(rng, 10, 40);
    Eigen::VectorXd y = testsupport::random_vector(rng, 40);
    SolverConfig cfg;
    FactoredSystem sys = precompute(x, y, nullptr, cfg);
    SolverResult sequential = solve(sys);

    std::vector<SolverResult> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = solve(sys); });
    for (auto& th : pool) th.join();
    for (const auto& result : results) {
        CHECK(result.beta_star == sequential.beta_star);
        CHECK(result.iterations == sequential.iterations);
    }
}

TEST_CASE("solver result serializes with the documented keys") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd y(2);
    y << 1.0, 2.0;
    SolverResult result = solve(x, y, nullptr, SolverConfig{});
    auto doc = nlohmann::json::parse(solver_result_to_json(result));
    CHECK(doc["beta"].size() == 2);
    CHECK(doc["converged"].is_boolean());
    CHECK(doc["iterations"].is_number_integer());
    CHECK(doc.contains("primal_residual"));
    CHECK(doc.contains("dual_residual"));
    CHECK(doc.contains("objective"));
    CHECK(doc["kkt"].contains("stationarity"));
    CHECK(doc["kkt"].contains("dual_feasibility"));
}
