#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "structnet/solver.hpp"

namespace structnet {

enum class SelectionMethod { InElasticNet, ElasticNet, Lasso, Ridge };

std::string selection_method_name(SelectionMethod method);
SelectionMethod parse_selection_method(const std::string& name);

struct SelectionReport {
    std::vector<int> ranking;  // all indices, |beta| descending, index ascending ties
    std::vector<int> selected; // ascending indices with |beta| > zero_tol
    Eigen::VectorXd beta_star;
    double zero_tol = 1e-8;
    SelectionMethod method = SelectionMethod::InElasticNet;
    SolverConfig config;
};

// Orders features by coefficient magnitude. The solver's gamma iterate is
// exactly sparse, so zero_tol only guards serialization round-off.
SelectionReport rank_features(const Eigen::VectorXd& beta_star, double zero_tol = 1e-8);

std::string selection_report_to_json(const SelectionReport& report);

} // namespace structnet
