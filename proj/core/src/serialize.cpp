#include <json.hpp>

#include "structnet/evaluation.hpp"
#include "structnet/info_theory.hpp"
#include "structnet/selection.hpp"
#include "structnet/solver.hpp"

namespace structnet {

namespace {

using json = nlohmann::ordered_json;

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

} // namespace

std::string interaction_to_json(const InteractionMatrix& im) {
    json doc;
    doc["features"] = im.feature_names;
    json rows = json::array();
    for (Eigen::Index r = 0; r < im.w.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < im.w.cols(); ++c) row.push_back(im.w(r, c));
        rows.push_back(std::move(row));
    }
    doc["w"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string solver_result_to_json(const SolverResult& result) {
    json doc;
    doc["beta"] = vector_to_json(result.beta_star);
    doc["converged"] = result.converged;
    doc["iterations"] = result.iterations;
    doc["primal_residual"] = result.primal_residual;
    doc["dual_residual"] = result.dual_residual;
    doc["objective"] = result.objective_value;
    doc["kkt"] = {{"stationarity", result.kkt.stationarity_gap},
                  {"dual_feasibility", result.kkt.dual_feasibility_gap}};
    return doc.dump(2) + "\n";
}

std::string selection_report_to_json(const SelectionReport& report) {
    json doc;
    doc["method"] = selection_method_name(report.method);
    doc["zero_tol"] = report.zero_tol;
    doc["ranking"] = report.ranking;
    doc["selected"] = report.selected;
    doc["beta_star"] = vector_to_json(report.beta_star);
    return doc.dump(2) + "\n";
}

std::string eval_report_to_json(const EvalReport& report) {
    json doc;
    doc["classifier"] = report.classifier;
    doc["folds"] = report.folds;
    json curve = json::array();
    for (const auto& point : report.per_k)
        curve.push_back({{"k", point.k},
                         {"mean_accuracy", point.mean_accuracy},
                         {"std", point.std_dev}});
    doc["curve"] = std::move(curve);
    return doc.dump(2) + "\n";
}

} // namespace structnet
