#include "structnet/solver.hpp"

#include <cmath>

#include "structnet/errors.hpp"

namespace structnet {

void SolverConfig::validate() const {
    if (!(lambda1 >= 0.0)) throw Error("lambda1 must be >= 0");
    if (!(lambda2 >= 0.0)) throw Error("lambda2 must be >= 0");
    if (!(lambda3 >= 0.0)) throw Error("lambda3 must be >= 0");
    if (!(rho > 0.0)) throw Error("rho must be > 0");
    if (max_iter < 1) throw Error("max_iter must be >= 1");
    if (!(eps_abs > 0.0)) throw Error("eps_abs must be > 0");
    if (!(eps_rel > 0.0)) throw Error("eps_rel must be > 0");
}

FactoredSystem::FactoredSystem(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                               const Eigen::MatrixXd* w, const SolverConfig& config)
    : config_(config) {
    config.validate();
    const Eigen::Index n = x.rows();
    if (x.cols() != y.size())
        throw LengthMismatchError("design matrix has " + std::to_string(x.cols()) +
                                  " samples but y has " + std::to_string(y.size()));
    if (w) {
        if (w->rows() != n || w->cols() != n)
            throw LengthMismatchError("interaction matrix does not match the feature count");
        double scale = w->cwiseAbs().maxCoeff();
        if ((*w - w->transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
            throw Error("interaction matrix is not symmetric");
        w_ = *w;
        has_w_ = true;
    }

    xxt_ = x * x.transpose();
    xy_ = x * y;
    y_sqnorm_ = y.squaredNorm();

    Eigen::MatrixXd a = xxt_;
    a.diagonal().array() += config.lambda2 + config.rho;
    if (has_w_ && config.lambda3 != 0.0) a -= 2.0 * config.lambda3 * w_;

    llt_.compute(a);
    if (llt_.info() != Eigen::Success)
        throw NotPositiveDefiniteError(
            "normal-equation matrix is not positive definite; "
            "increase rho or lambda2, or decrease lambda3");
}

Eigen::VectorXd FactoredSystem::solve_system(const Eigen::VectorXd& rhs) const {
    return llt_.solve(rhs);
}

FactoredSystem precompute(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const Eigen::MatrixXd* w, const SolverConfig& config) {
    return FactoredSystem(x, y, w, config);
}

Eigen::VectorXd update_beta(const FactoredSystem& sys, const Eigen::VectorXd& gamma,
                            const Eigen::VectorXd& z) {
    return sys.solve_system(sys.xy() - z + sys.config().rho * gamma);
}

Eigen::VectorXd update_gamma(const Eigen::VectorXd& beta, const Eigen::VectorXd& z,
                             double lambda1, double rho) {
    Eigen::VectorXd gamma(beta.size());
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
        double v = z[i] + rho * beta[i];
        if (v > lambda1)
            gamma[i] = (v - lambda1) / rho;
        else if (v < -lambda1)
            gamma[i] = (v + lambda1) / rho;
        else
            gamma[i] = 0.0;
    }
    return gamma;
}

Eigen::VectorXd update_z(const Eigen::VectorXd& z, const Eigen::VectorXd& beta,
                         const Eigen::VectorXd& gamma, double rho) {
    return z + rho * (beta - gamma);
}

namespace {

KktReport kkt_report(const FactoredSystem& sys, const Eigen::VectorXd& beta,
                     const Eigen::VectorXd& gamma, const Eigen::VectorXd& z) {
    const SolverConfig& cfg = sys.config();
    Eigen::VectorXd grad = sys.xxt() * beta - sys.xy() + cfg.lambda2 * beta + z;
    if (sys.interaction() && cfg.lambda3 != 0.0)
        grad -= 2.0 * cfg.lambda3 * (*sys.interaction() * beta);

    double dual_gap = 0.0;
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
        double gap;
        if (gamma[i] == 0.0)
            gap = std::max(std::abs(z[i]) - cfg.lambda1, 0.0);
        else
            gap = std::abs(z[i] - (gamma[i] > 0.0 ? cfg.lambda1 : -cfg.lambda1));
        dual_gap = std::max(dual_gap, gap);
    }
    return {grad.cwiseAbs().maxCoeff(), dual_gap};
}

double objective_value(const FactoredSystem& sys, const Eigen::VectorXd& beta) {
    const SolverConfig& cfg = sys.config();
    double fit = 0.5 * (sys.y_sqnorm() - 2.0 * beta.dot(sys.xy()) +
                        beta.dot(sys.xxt() * beta));
    double value = fit + cfg.lambda1 * beta.lpNorm<1>() + cfg.lambda2 * beta.squaredNorm();
    if (sys.interaction() && cfg.lambda3 != 0.0)
        value -= cfg.lambda3 * beta.dot(*sys.interaction() * beta);
    return value;
}

} // namespace

SolverResult solve(const FactoredSystem& sys) {
    const SolverConfig& cfg = sys.config();
    const Eigen::Index n = sys.dimension();
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    SolverState state;
    state.beta = Eigen::VectorXd::Zero(n);
    state.gamma = Eigen::VectorXd::Zero(n);
    state.z = Eigen::VectorXd::Zero(n);

    bool converged = false;
    while (state.iter < cfg.max_iter) {
        ++state.iter;
        state.beta = update_beta(sys, state.gamma, state.z);
        Eigen::VectorXd gamma_prev = std::move(state.gamma);
        state.gamma = update_gamma(state.beta, state.z, cfg.lambda1, cfg.rho);
        state.z = update_z(state.z, state.beta, state.gamma, cfg.rho);

        state.primal_residual = (state.beta - state.gamma).norm();
        state.dual_residual = cfg.rho * (state.gamma - gamma_prev).norm();
        double eps_pri = sqrt_n * cfg.eps_abs +
                         cfg.eps_rel * std::max(state.beta.norm(), state.gamma.norm());
        double eps_dual = sqrt_n * cfg.eps_abs + cfg.eps_rel * state.z.norm();
        if (state.primal_residual <= eps_pri && state.dual_residual <= eps_dual) {
            converged = true;
            break;
        }
    }

    SolverResult result;
    result.beta_star = state.gamma;
    result.converged = converged;
    result.iterations = state.iter;
    result.primal_residual = state.primal_residual;
    result.dual_residual = state.dual_residual;
    result.objective_value = objective_value(sys, state.gamma);
    result.kkt = kkt_report(sys, state.beta, state.gamma, state.z);
    return result;
}

SolverResult solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                   const Eigen::MatrixXd* w, const SolverConfig& config) {
    return solve(precompute(x, y, w, config));
}

SolverResult solve_baseline(BaselineKind kind, const Eigen::MatrixXd& x,
                            const Eigen::VectorXd& y, const SolverConfig& config) {
    SolverConfig cfg = config;
    cfg.lambda3 = 0.0;
    switch (kind) {
    case BaselineKind::Ridge:
        cfg.lambda1 = 0.0;
        break;
    case BaselineKind::Lasso:
        cfg.lambda2 = 0.0;
        break;
    case BaselineKind::ElasticNet:
        break;
    }
    return solve(x, y, nullptr, cfg);
}

} // namespace structnet
