#include "structnet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <ostream>
#include <random>

#include "structnet/errors.hpp"
#include "structnet/format.hpp"
#include "structnet/parallel.hpp"

namespace structnet {

namespace {

// Explicit Fisher-Yates so fold assignment only depends on the mt19937
// stream, not on library shuffle internals.
void shuffle_indices(std::vector<int>& idx, std::mt19937& rng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::size_t j = rng() % i;
        std::swap(idx[i - 1], idx[j]);
    }
}

// Per-class round-robin deal into folds, preserving class proportions.
std::vector<int> stratified_folds(const Target& target, int folds, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> assignment(static_cast<std::size_t>(target.sample_count()), 0);
    for (int c = 0; c < target.class_count; ++c) {
        std::vector<int> members;
        for (std::size_t a = 0; a < target.labels.size(); ++a)
            if (target.labels[a] == c) members.push_back(static_cast<int>(a));
        shuffle_indices(members, rng);
        for (std::size_t r = 0; r < members.size(); ++r)
            assignment[static_cast<std::size_t>(members[r])] = static_cast<int>(r % folds);
    }
    return assignment;
}

int knn_predict(const Eigen::MatrixXd& train, const std::vector<int>& train_labels,
                const Eigen::RowVectorXd& query, int k, int class_count) {
    const Eigen::Index n_train = train.rows();
    // (distance, train row) pairs; the index makes distance ties deterministic
    std::vector<std::pair<double, int>> dist(static_cast<std::size_t>(n_train));
    for (Eigen::Index t = 0; t < n_train; ++t)
        dist[static_cast<std::size_t>(t)] = {(train.row(t) - query).squaredNorm(),
                                             static_cast<int>(t)};
    const int kk = std::min<int>(k, static_cast<int>(n_train));
    std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());

    std::vector<int> votes(static_cast<std::size_t>(class_count), 0);
    for (int i = 0; i < kk; ++i) {
        int label = train_labels[static_cast<std::size_t>(dist[static_cast<std::size_t>(i)].second)];
        votes[static_cast<std::size_t>(label)]++;
    }
    // majority vote, ties toward the smallest class id
    int best = 0;
    for (int c = 1; c < class_count; ++c)
        if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) best = c;
    return best;
}

} // namespace

std::pair<double, double> knn_cross_validate(const FeatureMatrix& data, const Target& target,
                                             const std::vector<int>& feature_subset,
                                             int folds, int k_neighbors, unsigned seed) {
    if (target.kind != TargetKind::Discrete)
        throw Error("knn_cross_validate requires a discrete target");
    if (feature_subset.empty()) throw EmptySubsetError("feature subset is empty");
    if (folds < 2) throw Error("folds must be >= 2");
    if (k_neighbors < 1) throw Error("k_neighbors must be >= 1");
    for (int f : feature_subset)
        if (f < 0 || f >= data.feature_count())
            throw Error("feature index out of range: " + std::to_string(f));
    for (int size : target.class_sizes())
        if (size < folds)
            throw ClassTooSmallError("a class has " + std::to_string(size) +
                                     " samples, fewer than " + std::to_string(folds) + " folds");

    const Eigen::Index m = data.sample_count();
    Eigen::MatrixXd restricted(m, static_cast<Eigen::Index>(feature_subset.size()));
    for (std::size_t c = 0; c < feature_subset.size(); ++c)
        restricted.col(static_cast<Eigen::Index>(c)) = data.values.col(feature_subset[c]);

    const std::vector<int> assignment = stratified_folds(target, folds, seed);

    std::vector<double> fold_accuracy(static_cast<std::size_t>(folds), 0.0);
    parallel_for(static_cast<std::size_t>(folds), [&](std::size_t fold) {
        std::vector<int> train_rows, test_rows;
        for (Eigen::Index a = 0; a < m; ++a) {
            if (assignment[static_cast<std::size_t>(a)] == static_cast<int>(fold))
                test_rows.push_back(static_cast<int>(a));
            else
                train_rows.push_back(static_cast<int>(a));
        }
        Eigen::MatrixXd train(static_cast<Eigen::Index>(train_rows.size()), restricted.cols());
        std::vector<int> train_labels(train_rows.size());
        for (std::size_t r = 0; r < train_rows.size(); ++r) {
            train.row(static_cast<Eigen::Index>(r)) = restricted.row(train_rows[r]);
            train_labels[r] = target.labels[static_cast<std::size_t>(train_rows[r])];
        }
        int correct = 0;
        for (int row : test_rows) {
            int predicted = knn_predict(train, train_labels, restricted.row(row), k_neighbors,
                                        target.class_count);
            if (predicted == target.labels[static_cast<std::size_t>(row)]) ++correct;
        }
        fold_accuracy[fold] =
            test_rows.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(test_rows.size());
    });

    // reduce in fold-index order
    double mean = 0.0;
    for (double a : fold_accuracy) mean += a;
    mean /= static_cast<double>(folds);
    double var = 0.0;
    for (double a : fold_accuracy) var += (a - mean) * (a - mean);
    var /= static_cast<double>(folds);
    return {mean, std::sqrt(var)};
}

EvalReport accuracy_curve(const FeatureMatrix& data, const Target& target,
                          SelectionMethod method, const std::vector<int>& k_list,
                          const SolverConfig& solver_config, const CrossValConfig& cv_config) {
    if (k_list.empty()) throw InvalidKListError("k list is empty");
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        if (k_list[i] < 1 || k_list[i] > data.feature_count())
            throw InvalidKListError("k = " + std::to_string(k_list[i]) + " is out of range");
        if (i > 0 && k_list[i] <= k_list[i - 1])
            throw InvalidKListError("k list must be strictly increasing");
    }

    int folds = cv_config.folds;
    int smallest_class = data.values.rows();
    for (int size : target.class_sizes()) smallest_class = std::min(smallest_class, size);
    if (smallest_class < folds) {
        folds = std::max(2, smallest_class);
        std::cerr << "structnet: warning: reducing folds to " << folds
                  << " (smallest class has " << smallest_class << " samples)\n";
    }

    SolverResult solved;
    const Eigen::MatrixXd design = data.design_matrix();
    const Eigen::VectorXd y = target.as_regression_vector();
    if (method == SelectionMethod::InElasticNet) {
        InteractionMatrix im = build_interaction_matrix(data, target, cv_config.interaction);
        solved = solve(design, y, &im.w, solver_config);
    } else {
        BaselineKind kind = method == SelectionMethod::Ridge ? BaselineKind::Ridge
                            : method == SelectionMethod::Lasso ? BaselineKind::Lasso
                                                               : BaselineKind::ElasticNet;
        solved = solve_baseline(kind, design, y, solver_config);
    }
    SelectionReport report = rank_features(solved.beta_star);

    EvalReport eval;
    eval.folds = folds;
    eval.classifier = "knn(k=" + std::to_string(cv_config.k_neighbors) + ")";
    for (int k : k_list) {
        std::vector<int> subset(report.ranking.begin(), report.ranking.begin() + k);
        auto [mean, sd] = knn_cross_validate(data, target, subset, folds,
                                             cv_config.k_neighbors, cv_config.seed);
        eval.per_k.push_back({k, mean, sd});
    }
    return eval;
}

void write_eval_csv(std::ostream& out, const EvalReport& report) {
    out << "k,mean_accuracy,std\n";
    for (const auto& point : report.per_k)
        out << point.k << ',' << format_double(point.mean_accuracy) << ','
            << format_double(point.std_dev) << '\n';
}

} // namespace structnet
