#include "structnet/synthetic.hpp"

#include <cmath>
#include <random>
#include <string>

#include "structnet/errors.hpp"

namespace structnet {

SyntheticDataset synthetic_benchmark(const SyntheticSpec& spec) {
    if (spec.n_relevant < 0 || spec.n_noise < 0 || spec.n_duplicates_per_relevant < 0)
        throw Error("synthetic_benchmark: counts must be non-negative");
    if (!(spec.correlation >= 0.0 && spec.correlation < 1.0))
        throw Error("synthetic_benchmark: correlation must be in [0, 1)");
    if (spec.sample_count < 10)
        throw Error("synthetic_benchmark: need at least 10 samples");
    const int n_features =
        spec.n_relevant + spec.n_relevant * spec.n_duplicates_per_relevant + spec.n_noise;
    if (n_features < 1) throw Error("synthetic_benchmark: no features");

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const Eigen::Index m = spec.sample_count;

    SyntheticDataset out;
    out.features.values.resize(m, n_features);
    out.features.feature_names.reserve(static_cast<std::size_t>(n_features));

    int col = 0;
    for (int r = 0; r < spec.n_relevant; ++r) {
        for (Eigen::Index a = 0; a < m; ++a) out.features.values(a, col) = normal(rng);
        out.features.feature_names.push_back("rel_" + std::to_string(r));
        out.ground_truth.push_back(col);
        ++col;
    }
    const double mix = std::sqrt(1.0 - spec.correlation * spec.correlation);
    for (int r = 0; r < spec.n_relevant; ++r) {
        for (int d = 0; d < spec.n_duplicates_per_relevant; ++d) {
            for (Eigen::Index a = 0; a < m; ++a)
                out.features.values(a, col) =
                    spec.correlation * out.features.values(a, r) + mix * normal(rng);
            out.features.feature_names.push_back("dup_" + std::to_string(r) + "_" +
                                                 std::to_string(d));
            out.correlated_pairs.emplace_back(r, col);
            ++col;
        }
    }
    for (int j = 0; j < spec.n_noise; ++j) {
        for (Eigen::Index a = 0; a < m; ++a) out.features.values(a, col) = normal(rng);
        out.features.feature_names.push_back("noise_" + std::to_string(j));
        ++col;
    }

    out.target.kind = TargetKind::Discrete;
    out.target.class_count = 2;
    out.target.labels.resize(static_cast<std::size_t>(m));
    if (spec.n_relevant > 0) {
        for (Eigen::Index a = 0; a < m; ++a) {
            double sum = out.features.values.row(a).head(spec.n_relevant).sum();
            out.target.labels[static_cast<std::size_t>(a)] = sum > 0.0 ? 1 : 0;
        }
        // The sign rule leaves one class empty with probability ~2^-M; keep
        // the target well-formed anyway.
        bool has0 = false, has1 = false;
        for (int label : out.target.labels) (label ? has1 : has0) = true;
        if (!has0 || !has1) out.target.labels[0] = 1 - out.target.labels[0];
    } else {
        // no relevant features: the sum rule degenerates, draw fair labels
        for (Eigen::Index a = 0; a < m; ++a)
            out.target.labels[static_cast<std::size_t>(a)] = static_cast<int>(rng() & 1u);
        bool has0 = false, has1 = false;
        for (int label : out.target.labels) (label ? has1 : has0) = true;
        if (!has0 || !has1) out.target.labels[0] = 1 - out.target.labels[0];
    }

    out.features.validate();
    out.target.validate();
    return out;
}

} // namespace structnet
