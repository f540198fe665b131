#include "structnet/feature_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <vector>

#include "structnet/errors.hpp"
#include "structnet/format.hpp"

namespace structnet {

FeatureGraph build_feature_graph(const Eigen::VectorXd& feature) {
    const Eigen::Index m = feature.size();
    if (m < 2) throw TooFewSamplesError("a feature graph needs at least 2 samples");
    if (!feature.allFinite()) throw Error("feature contains a non-finite value");

    FeatureGraph graph;
    graph.weights.resize(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        graph.weights(a, a) = 0.0;
        for (Eigen::Index b = a + 1; b < m; ++b) {
            double w = std::abs(feature[a] - feature[b]);
            graph.weights(a, b) = w;
            graph.weights(b, a) = w;
        }
    }
    graph.distribution = vertex_distribution(graph.weights);
    return graph;
}

FeatureGraph build_target_graph_continuous(const Eigen::VectorXd& y) {
    return build_feature_graph(y);
}

FeatureGraph build_target_graph_discrete(const Eigen::VectorXd& feature,
                                         const Target& target) {
    return build_feature_graph(class_means(feature, target));
}

Eigen::VectorXd vertex_distribution(const Eigen::MatrixXd& weights) {
    const Eigen::Index m = weights.rows();
    if (m != weights.cols()) throw Error("weight matrix must be square");
    Eigen::VectorXd strengths = weights.rowwise().sum();
    double total = strengths.sum();
    if (total <= 0.0) return Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    return strengths / total;
}

Eigen::VectorXd vertex_strength_distribution(const Eigen::VectorXd& feature) {
    const Eigen::Index m = feature.size();
    std::vector<std::pair<double, Eigen::Index>> sorted(static_cast<std::size_t>(m));
    for (Eigen::Index a = 0; a < m; ++a) sorted[static_cast<std::size_t>(a)] = {feature[a], a};
    std::sort(sorted.begin(), sorted.end());

    Eigen::VectorXd strengths(m);
    double prefix = 0.0;        // sum of the r smallest values
    double total_sum = 0.0;
    for (const auto& [x, a] : sorted) total_sum += x;
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        const auto [x, a] = sorted[r];
        prefix += x;
        const double rank = static_cast<double>(r + 1);
        strengths[a] = (2.0 * rank - static_cast<double>(m)) * x + total_sum - 2.0 * prefix;
    }
    double total = strengths.sum();
    if (total <= 0.0) return Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    return strengths / total;
}

void write_weights_csv(std::ostream& out, const Eigen::MatrixXd& weights) {
    for (Eigen::Index r = 0; r < weights.rows(); ++r) {
        for (Eigen::Index c = 0; c < weights.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(weights(r, c));
        }
        out << '\n';
    }
}

} // namespace structnet
