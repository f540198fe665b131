#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <string>

namespace structnet {

// Hyperparameters for
//   min_beta 0.5 ||y^T - beta^T X||^2 + lambda1 ||beta||_1
//            + lambda2 ||beta||^2 - lambda3 beta^T W beta
// solved by ADMM on the split beta = gamma with dual z and penalty rho.
struct SolverConfig {
    double lambda1 = 0.1; // l1 weight, >= 0
    double lambda2 = 1.0; // l2 weight, >= 0
    double lambda3 = 0.1; // interaction weight, >= 0
    double rho = 1.0;     // ADMM penalty / dual step, > 0
    int max_iter = 1000;
    double eps_abs = 1e-6;
    double eps_rel = 1e-4;

    void validate() const; // throws Error on a violated constraint
};

// ADMM iterates; exposed so the update steps can be driven one at a time.
struct SolverState {
    Eigen::VectorXd beta;
    Eigen::VectorXd gamma;
    Eigen::VectorXd z;
    int iter = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
};

struct KktReport {
    // || X X^T beta - X y + lambda2 beta - 2 lambda3 W beta + z ||_inf at the
    // final beta iterate (the gradient convention matching the beta update).
    double stationarity_gap = 0.0;
    // max_i of (|z_i| - lambda1)+ where gamma_i = 0, and
    // |z_i - sign(gamma_i) lambda1| where gamma_i != 0.
    double dual_feasibility_gap = 0.0;
};

struct SolverResult {
    Eigen::VectorXd beta_star; // taken from gamma, so exactly sparse
    bool converged = false;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double objective_value = 0.0;
    KktReport kkt;
};

// The normal-equation matrix A = X X^T + lambda2 I - 2 lambda3 W + rho I is
// constant across iterations; it is formed and Cholesky-factored once, then
// every beta update is two triangular solves.
class FactoredSystem {
public:
    FactoredSystem(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                   const Eigen::MatrixXd* w, const SolverConfig& config);

    Eigen::Index dimension() const { return xy_.size(); }
    const Eigen::VectorXd& xy() const { return xy_; }
    const Eigen::MatrixXd& xxt() const { return xxt_; }
    double y_sqnorm() const { return y_sqnorm_; }
    const Eigen::MatrixXd* interaction() const { return has_w_ ? &w_ : nullptr; }
    const SolverConfig& config() const { return config_; }

    // Solves A v = rhs with the cached factorization.
    Eigen::VectorXd solve_system(const Eigen::VectorXd& rhs) const;

private:
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::MatrixXd xxt_;
    Eigen::VectorXd xy_;
    double y_sqnorm_ = 0.0;
    Eigen::MatrixXd w_;
    bool has_w_ = false;
    SolverConfig config_;
};

// Forms and factors A once. `x` is the feature-major design matrix (N x M),
// `w` may be null, which is the same as lambda3 = 0. Throws
// NotPositiveDefiniteError when A has a non-positive direction; the message
// advises increasing rho or lambda2, or decreasing lambda3.
FactoredSystem precompute(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const Eigen::MatrixXd* w, const SolverConfig& config);

// beta update: solves A beta = X y - z + rho gamma.
Eigen::VectorXd update_beta(const FactoredSystem& sys, const Eigen::VectorXd& gamma,
                            const Eigen::VectorXd& z);

// gamma update: element-wise soft-thresholding of v = z + rho beta,
//   gamma_i = (v_i - lambda1)/rho  if v_i >  lambda1
//             (v_i + lambda1)/rho  if v_i < -lambda1
//             0                    otherwise,
// the unique minimizer of lambda1 |g| - g z_i + (rho/2)(beta_i - g)^2.
Eigen::VectorXd update_gamma(const Eigen::VectorXd& beta, const Eigen::VectorXd& z,
                             double lambda1, double rho);

// Dual ascent: z + rho (beta - gamma).
Eigen::VectorXd update_z(const Eigen::VectorXd& z, const Eigen::VectorXd& beta,
                         const Eigen::VectorXd& gamma, double rho);

// Runs ADMM from beta = gamma = z = 0 until
//   ||beta - gamma||_2       <= sqrt(N) eps_abs + eps_rel max(||beta||, ||gamma||)
//   rho ||gamma_k+1-gamma_k|| <= sqrt(N) eps_abs + eps_rel ||z||
// or max_iter is reached (converged = false in that case, best state still
// returned). The reported coefficients are the gamma iterate.
SolverResult solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                   const Eigen::MatrixXd* w, const SolverConfig& config);
SolverResult solve(const FactoredSystem& sys);

enum class BaselineKind { Ridge, Lasso, ElasticNet };

// Baseline wrappers: Ridge forces lambda1 = lambda3 = 0, Lasso forces
// lambda2 = lambda3 = 0, ElasticNet forces lambda3 = 0.
SolverResult solve_baseline(BaselineKind kind, const Eigen::MatrixXd& x,
                            const Eigen::VectorXd& y, const SolverConfig& config);

// {"beta": [...], "converged": ..., "iterations": ..., "primal_residual": ...,
//  "dual_residual": ..., "objective": ..., "kkt": {...}}
std::string solver_result_to_json(const SolverResult& result);

} // namespace structnet
