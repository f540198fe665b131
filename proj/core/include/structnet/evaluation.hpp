#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "structnet/dataset.hpp"
#include "structnet/info_theory.hpp"
#include "structnet/selection.hpp"

namespace structnet {

struct EvalPoint {
    int k = 0;
    double mean_accuracy = 0.0;
    double std_dev = 0.0;
};

struct EvalReport {
    std::vector<EvalPoint> per_k; // k strictly increasing
    int folds = 0;
    std::string classifier;
};

struct CrossValConfig {
    int folds = 10;
    int k_neighbors = 5;
    unsigned seed = 0;
    InteractionOptions interaction; // used when the method needs W
};

// Stratified k-fold cross-validation of a k-NN classifier restricted to the
// given feature columns. Fold assignment comes from a Fisher-Yates shuffle of
// each class driven by the seed; neighbor votes tie-break toward the smallest
// class id. Returns (mean accuracy, population std over folds).
std::pair<double, double> knn_cross_validate(const FeatureMatrix& data,
                                             const Target& target,
                                             const std::vector<int>& feature_subset,
                                             int folds, int k_neighbors, unsigned seed);

// Runs the selector once, then evaluates the top-k ranked subsets for each k
// in k_list with identical fold assignments (same seed). k_list must be
// strictly increasing with max(k_list) <= N. When classes are too small for
// the requested fold count, folds are reduced to the largest feasible value
// with a warning on stderr.
EvalReport accuracy_curve(const FeatureMatrix& data, const Target& target,
                          SelectionMethod method, const std::vector<int>& k_list,
                          const SolverConfig& solver_config,
                          const CrossValConfig& cv_config);

// CSV columns: k, mean_accuracy, std.
void write_eval_csv(std::ostream& out, const EvalReport& report);

std::string eval_report_to_json(const EvalReport& report);

} // namespace structnet
