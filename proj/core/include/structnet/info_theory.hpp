#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

#include "structnet/dataset.hpp"
#include "structnet/feature_graph.hpp"

namespace structnet {

// Symmetric N x N matrix of pairwise feature informativeness scores
//   w[i][j] = (I_S(G_i, T_i) + I_S(G_j, T_j)) / I_S(G_i, G_j),
// where T_i is the shared target graph for continuous responses and the
// per-feature class-mean graph for discrete ones. Every entry lies in [1, 4]:
// the numerator is in [1, 2] and the denominator in [0.5, 1].
struct InteractionMatrix {
    Eigen::MatrixXd w;
    Eigen::VectorXd per_feature_target_similarity; // I_S(G_i, T_i)
    std::vector<std::string> feature_names;

    Eigen::Index feature_count() const { return w.rows(); }
};

struct InteractionOptions {
    bool zero_diagonal = false;          // null the diagonal instead of 2*I_S(G_i,T_i)
    bool warn_if_unstandardized = true;  // one stderr line when columns look raw
};

// Shannon entropy in nats, -sum p ln p with 0 ln 0 := 0. Rejects vectors
// with negative entries or a sum farther than 1e-9 from 1.
double shannon_entropy(const Eigen::VectorXd& p);

// Jensen-Shannon divergence in nats, H((p+q)/2) - H(p)/2 - H(q)/2.
// Bounded by ln 2; negative round-off beyond -1e-12 is clamped to 0.
double jsd(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// exp(-JSD(p, q)), in [0.5, 1].
double similarity(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

// Relevance degree of a feature pair given their graphs and target graphs.
double relevance(const FeatureGraph& g_i, const FeatureGraph& g_j,
                 const FeatureGraph& target_i, const FeatureGraph& target_j);

// Computes the full interaction matrix. Per-feature distributions and
// entropies are computed once; the pair loop runs in parallel with each
// entry an independent pure function, so results do not depend on the
// thread count.
InteractionMatrix build_interaction_matrix(const FeatureMatrix& data,
                                           const Target& target,
                                           const InteractionOptions& options = {});

// N x N CSV with a header row of feature names, 17 significant digits.
void write_interaction_csv(std::ostream& out, const InteractionMatrix& im);

// {"features": [...], "w": [[...]]}
std::string interaction_to_json(const InteractionMatrix& im);

} // namespace structnet
