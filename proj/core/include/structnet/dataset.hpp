#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace structnet {

enum class TargetKind { Continuous, Discrete };

// Target column of a dataset. Discrete targets carry contiguous class ids
// 0..C-1 assigned in order of first appearance in the source file.
struct Target {
    TargetKind kind = TargetKind::Continuous;
    Eigen::VectorXd continuous_values; // filled when kind == Continuous
    std::vector<int> labels;           // filled when kind == Discrete
    int class_count = 0;               // C, Discrete only

    Eigen::Index sample_count() const {
        return kind == TargetKind::Continuous
                   ? continuous_values.size()
                   : static_cast<Eigen::Index>(labels.size());
    }

    // The response vector fed to the regression model: continuous values
    // pass through, discrete class ids are cast to double.
    Eigen::VectorXd as_regression_vector() const;

    // Number of samples in each class (Discrete only).
    std::vector<int> class_sizes() const;

    void validate() const;
};

// Dense sample-major dataset: rows are the M samples, columns the N features.
struct FeatureMatrix {
    Eigen::MatrixXd values; // M x N
    std::vector<std::string> feature_names;

    Eigen::Index sample_count() const { return values.rows(); }
    Eigen::Index feature_count() const { return values.cols(); }

    // Feature-major design matrix (N x M) used by the regression solver.
    Eigen::MatrixXd design_matrix() const { return values.transpose(); }

    void validate() const;
};

struct StandardizationRecord {
    Eigen::VectorXd means;
    Eigen::VectorXd std_devs; // population std; an entry of 0 marks a constant feature
    bool applied = false;
};

struct LoadedDataset {
    FeatureMatrix features;
    Target target;
};

// Loads a CSV file with one header row. `target_column` is a column name, or
// a 0-based column index if no header entry matches and the string parses as
// an integer. Empty or unparsable cells raise MissingValueError; non-finite
// values are rejected the same way.
LoadedDataset load_csv(const std::string& path, const std::string& target_column,
                       TargetKind target_kind);

// Writes features plus the target as one CSV, doubles at 17 significant
// digits so a reload reproduces them bit-exactly.
void write_csv(const std::string& path, const FeatureMatrix& features,
               const Target& target, const std::string& target_name);

// Centers each column and scales non-constant columns to unit population
// standard deviation (divide by sqrt(sum((x-mu)^2)/M)). Constant columns
// become all-zero and are flagged with std_dev = 0.
std::pair<FeatureMatrix, StandardizationRecord> standardize(const FeatureMatrix& m);

// Replaces every sample by the mean of its class: out[a] = mean of
// feature[b] over all b with label[b] == label[a]. Requires a discrete target.
Eigen::VectorXd class_means(const Eigen::VectorXd& feature, const Target& target);

} // namespace structnet
