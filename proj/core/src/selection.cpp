#include "structnet/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "structnet/errors.hpp"

namespace structnet {

std::string selection_method_name(SelectionMethod method) {
    switch (method) {
    case SelectionMethod::InElasticNet: return "inelasticnet";
    case SelectionMethod::ElasticNet: return "elasticnet";
    case SelectionMethod::Lasso: return "lasso";
    case SelectionMethod::Ridge: return "ridge";
    }
    return "unknown";
}

SelectionMethod parse_selection_method(const std::string& name) {
    if (name == "inelasticnet") return SelectionMethod::InElasticNet;
    if (name == "elasticnet") return SelectionMethod::ElasticNet;
    if (name == "lasso") return SelectionMethod::Lasso;
    if (name == "ridge") return SelectionMethod::Ridge;
    throw Error("unknown method: " + name +
                " (expected ridge, lasso, elasticnet, or inelasticnet)");
}

SelectionReport rank_features(const Eigen::VectorXd& beta_star, double zero_tol) {
    if (zero_tol < 0.0) throw Error("zero_tol must be >= 0");
    SelectionReport report;
    report.beta_star = beta_star;
    report.zero_tol = zero_tol;

    report.ranking.resize(static_cast<std::size_t>(beta_star.size()));
    std::iota(report.ranking.begin(), report.ranking.end(), 0);
    std::stable_sort(report.ranking.begin(), report.ranking.end(), [&](int a, int b) {
        double ma = std::abs(beta_star[a]);
        double mb = std::abs(beta_star[b]);
        if (ma != mb) return ma > mb;
        return a < b;
    });

    for (int i = 0; i < static_cast<int>(beta_star.size()); ++i)
        if (std::abs(beta_star[i]) > zero_tol) report.selected.push_back(i);
    return report;
}

} // namespace structnet
