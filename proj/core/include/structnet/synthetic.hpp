#pragma once

#include <utility>
#include <vector>

#include "structnet/dataset.hpp"

namespace structnet {

struct SyntheticSpec {
    int n_relevant = 5;
    int n_noise = 45;
    int n_duplicates_per_relevant = 0;
    double correlation = 0.95; // in [0, 1)
    int sample_count = 200;    // >= 10
    unsigned seed = 0;
};

struct SyntheticDataset {
    FeatureMatrix features;
    Target target;                                    // 2 classes
    std::vector<int> ground_truth;                    // indices of relevant features
    std::vector<std::pair<int, int>> correlated_pairs; // (relevant, duplicate)
};

// Ground-truth recovery benchmark. Relevant features are standard normal,
// each duplicate is correlation * relevant + sqrt(1 - correlation^2) * fresh
// noise, noise features are independent standard normal. The binary target is
// 1 where the sum of the relevant features is positive. With n_relevant = 0
// the sum rule degenerates to one class, so labels are drawn uniformly from
// the same seeded generator instead.
SyntheticDataset synthetic_benchmark(const SyntheticSpec& spec);

} // namespace structnet
