#include "structnet/info_theory.hpp"

#include <cmath>
#include <iostream>
#include <ostream>
#include <vector>

#include "structnet/errors.hpp"
#include "structnet/format.hpp"
#include "structnet/parallel.hpp"

namespace structnet {

namespace {

constexpr double kDistributionSumTol = 1e-9;
constexpr double kJsdRoundoffFloor = -1e-12;

double entropy_unchecked(const Eigen::VectorXd& p) {
    double h = 0.0;
    for (Eigen::Index a = 0; a < p.size(); ++a) {
        double v = p[a];
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

double finish_jsd(double raw) {
    if (raw < 0.0 && raw > kJsdRoundoffFloor) return 0.0;
    return raw;
}

// JSD with the marginal entropies already known; identical arithmetic to the
// public jsd() so both routes produce the same bits. Summing h_p + h_q before
// subtracting keeps jsd(p, q) == jsd(q, p) exact in floating point.
double jsd_cached(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double h_p, double h_q) {
    Eigen::VectorXd mix = 0.5 * (p + q);
    return finish_jsd(entropy_unchecked(mix) - 0.5 * (h_p + h_q));
}

void check_distribution(const Eigen::VectorXd& p) {
    double sum = 0.0;
    for (Eigen::Index a = 0; a < p.size(); ++a) {
        if (!(p[a] >= 0.0))
            throw InvalidDistributionError("distribution entry " + std::to_string(a) +
                                           " is negative or NaN");
        sum += p[a];
    }
    if (std::abs(sum - 1.0) > kDistributionSumTol)
        throw InvalidDistributionError("distribution sums to " + format_double(sum) +
                                       ", expected 1");
}

bool looks_standardized(const FeatureMatrix& data) {
    const double m = static_cast<double>(data.sample_count());
    for (Eigen::Index c = 0; c < data.feature_count(); ++c) {
        double mean = data.values.col(c).mean();
        double var = (data.values.col(c).array() - mean).square().sum() / m;
        if (var == 0.0) continue; // constant columns are fine either way
        if (std::abs(mean) > 1e-6 || std::abs(std::sqrt(var) - 1.0) > 1e-6) return false;
    }
    return true;
}

} // namespace

double shannon_entropy(const Eigen::VectorXd& p) {
    check_distribution(p);
    return entropy_unchecked(p);
}

double jsd(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size())
        throw LengthMismatchError("jsd: distributions have lengths " +
                                  std::to_string(p.size()) + " and " + std::to_string(q.size()));
    double h_p = shannon_entropy(p);
    double h_q = shannon_entropy(q);
    return jsd_cached(p, q, h_p, h_q);
}

double similarity(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    return std::exp(-jsd(p, q));
}

double relevance(const FeatureGraph& g_i, const FeatureGraph& g_j,
                 const FeatureGraph& target_i, const FeatureGraph& target_j) {
    const Eigen::Index m = g_i.vertex_count();
    if (g_j.vertex_count() != m || target_i.vertex_count() != m || target_j.vertex_count() != m)
        throw VertexCountMismatchError("relevance: graphs have different vertex counts");
    double num = similarity(g_i.distribution, target_i.distribution) +
                 similarity(g_j.distribution, target_j.distribution);
    double denom = similarity(g_i.distribution, g_j.distribution);
    return num / denom;
}

InteractionMatrix build_interaction_matrix(const FeatureMatrix& data, const Target& target,
                                           const InteractionOptions& options) {
    data.validate();
    target.validate();
    if (data.sample_count() != target.sample_count())
        throw LengthMismatchError("feature and target sample counts differ");
    if (options.warn_if_unstandardized && !looks_standardized(data))
        std::cerr << "structnet: warning: interaction matrix input does not look standardized\n";

    const Eigen::Index n = data.feature_count();

    // Per-feature distributions and entropies, computed once. The target
    // graph distribution is only needed to score each feature against the
    // target, so it is not retained.
    std::vector<Eigen::VectorXd> dist(static_cast<std::size_t>(n));
    std::vector<double> h(static_cast<std::size_t>(n));
    Eigen::VectorXd target_sim(n);

    Eigen::VectorXd shared_target_dist;
    double shared_target_entropy = 0.0;
    if (target.kind == TargetKind::Continuous) {
        shared_target_dist = vertex_strength_distribution(target.continuous_values);
        shared_target_entropy = entropy_unchecked(shared_target_dist);
    }

    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        const auto col = data.values.col(static_cast<Eigen::Index>(i));
        dist[i] = vertex_strength_distribution(col);
        h[i] = entropy_unchecked(dist[i]);
        double divergence;
        if (target.kind == TargetKind::Continuous) {
            divergence = jsd_cached(dist[i], shared_target_dist, h[i], shared_target_entropy);
        } else {
            Eigen::VectorXd td = vertex_strength_distribution(class_means(col, target));
            divergence = jsd_cached(dist[i], td, h[i], entropy_unchecked(td));
        }
        target_sim[static_cast<Eigen::Index>(i)] = std::exp(-divergence);
    });

    // Unordered pairs (i, j) with i <= j, flattened for the parallel loop.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) pairs.emplace_back(i, j);

    InteractionMatrix im;
    im.w.resize(n, n);
    im.per_feature_target_similarity = target_sim;
    im.feature_names = data.feature_names;

    parallel_for(pairs.size(), [&](std::size_t k) {
        auto [i, j] = pairs[k];
        double mutual = std::exp(-jsd_cached(dist[static_cast<std::size_t>(i)],
                                             dist[static_cast<std::size_t>(j)],
                                             h[static_cast<std::size_t>(i)],
                                             h[static_cast<std::size_t>(j)]));
        double value = (target_sim[i] + target_sim[j]) / mutual;
        im.w(i, j) = value;
        im.w(j, i) = value;
    });

    if (options.zero_diagonal) im.w.diagonal().setZero();
    return im;
}

void write_interaction_csv(std::ostream& out, const InteractionMatrix& im) {
    for (std::size_t c = 0; c < im.feature_names.size(); ++c) {
        if (c > 0) out << ',';
        out << im.feature_names[c];
    }
    out << '\n';
    for (Eigen::Index r = 0; r < im.w.rows(); ++r) {
        for (Eigen::Index c = 0; c < im.w.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(im.w(r, c));
        }
        out << '\n';
    }
}

} // namespace structnet
