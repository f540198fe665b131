#pragma once

#include <Eigen/Dense>

#include <iosfwd>

#include "structnet/dataset.hpp"

namespace structnet {

// Complete weighted graph over the M samples of one feature. Edge weights
// are absolute sample differences; the distribution is the normalized
// vertex-strength (weighted degree) vector.
struct FeatureGraph {
    Eigen::MatrixXd weights;      // M x M, symmetric, zero diagonal
    Eigen::VectorXd distribution; // entries >= 0, sums to 1

    Eigen::Index vertex_count() const { return distribution.size(); }
};

/// Builds the graph of a feature vector: weights[a][b] = |f[a] - f[b]|.
FeatureGraph build_feature_graph(const Eigen::VectorXd& feature);

/// Target graph for a continuous response: same construction applied to y.
FeatureGraph build_target_graph_continuous(const Eigen::VectorXd& y);

/// Target graph for a discrete response: the feature's per-class means stand
/// in for the sample values, so within-class weights vanish.
FeatureGraph build_target_graph_discrete(const Eigen::VectorXd& feature,
                                         const Target& target);

// Normalized vertex strengths: p_a = s_a / sum(s) with s_a = sum_b w[a][b].
// An all-zero graph yields the uniform distribution.
Eigen::VectorXd vertex_distribution(const Eigen::MatrixXd& weights);

// Same distribution as build_feature_graph(feature).distribution, computed
// in O(M log M) from sorted values without materializing the M x M weights.
// For sorted x with prefix sums P, sum_b |x_a - x_b| = (2r - M) x_a + P_M - 2 P_r
// where r is the 1-based sorted position of x_a.
Eigen::VectorXd vertex_strength_distribution(const Eigen::VectorXd& feature);

// Row-major CSV dump of a weight matrix, 17 significant digits.
void write_weights_csv(std::ostream& out, const Eigen::MatrixXd& weights);

} // namespace structnet
