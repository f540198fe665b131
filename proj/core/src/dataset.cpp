#include "structnet/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "structnet/errors.hpp"
#include "structnet/format.hpp"

namespace structnet {

namespace {

// Splits one CSV record. Quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Strict double parse: the whole (trimmed) cell must be consumed and the
// value must be finite.
bool parse_cell(const std::string& raw, double& out) {
    std::string cell = trim(raw);
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + cell.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

} // namespace

Eigen::VectorXd Target::as_regression_vector() const {
    if (kind == TargetKind::Continuous) return continuous_values;
    Eigen::VectorXd y(static_cast<Eigen::Index>(labels.size()));
    for (std::size_t a = 0; a < labels.size(); ++a) y[static_cast<Eigen::Index>(a)] = labels[a];
    return y;
}

std::vector<int> Target::class_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(class_count), 0);
    for (int label : labels) sizes[static_cast<std::size_t>(label)]++;
    return sizes;
}

void Target::validate() const {
    if (kind == TargetKind::Continuous) {
        if (!continuous_values.allFinite())
            throw Error("continuous target contains a non-finite value");
        return;
    }
    if (class_count < 2) throw Error("discrete target must have at least 2 classes");
    std::vector<int> sizes(static_cast<std::size_t>(class_count), 0);
    for (int label : labels) {
        if (label < 0 || label >= class_count)
            throw Error("discrete target label out of range");
        sizes[static_cast<std::size_t>(label)]++;
    }
    for (int s : sizes)
        if (s == 0) throw Error("discrete target has an empty class");
}

void FeatureMatrix::validate() const {
    if (values.rows() < 2) throw TooFewSamplesError("need at least 2 samples");
    if (values.cols() < 1) throw Error("need at least 1 feature");
    if (!values.allFinite()) throw Error("feature matrix contains a non-finite value");
    if (feature_names.size() != static_cast<std::size_t>(values.cols()))
        throw Error("feature name count does not match column count");
    std::unordered_set<std::string> seen;
    for (const auto& name : feature_names)
        if (!seen.insert(name).second)
            throw DuplicateFeatureNameError("duplicate feature name: " + name);
}

LoadedDataset load_csv(const std::string& path, const std::string& target_column,
                       TargetKind target_kind) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw Error("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_record(line);
    for (auto& h : header) h = trim(h);

    {
        std::unordered_set<std::string> seen;
        for (const auto& name : header)
            if (!seen.insert(name).second)
                throw DuplicateFeatureNameError("duplicate column name in header: " + name);
    }

    // Resolve the target column: exact header match first, then a 0-based index.
    std::size_t target_idx = header.size();
    auto it = std::find(header.begin(), header.end(), target_column);
    if (it != header.end()) {
        target_idx = static_cast<std::size_t>(it - header.begin());
    } else {
        char* end = nullptr;
        long idx = std::strtol(target_column.c_str(), &end, 10);
        if (end != target_column.c_str() && *end == '\0' && idx >= 0 &&
            static_cast<std::size_t>(idx) < header.size())
            target_idx = static_cast<std::size_t>(idx);
    }
    if (target_idx == header.size())
        throw TargetNotFoundError("target column not found: " + target_column);

    const std::size_t n_cols = header.size();
    std::vector<std::vector<double>> rows;
    std::vector<std::string> target_cells;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break; // trailing newline
        std::vector<std::string> cells = split_csv_record(line);
        if (cells.size() != n_cols)
            throw Error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n_cols) + " fields, got " + std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(n_cols - 1);
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (c == target_idx) {
                target_cells.push_back(trim(cells[c]));
                continue;
            }
            double v = 0.0;
            if (!parse_cell(cells[c], v))
                throw MissingValueError("line " + std::to_string(line_no) + ", column '" +
                                        header[c] + "': missing or unparsable value");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }

    const std::size_t m = rows.size();
    if (m < 2) throw TooFewSamplesError("need at least 2 samples, got " + std::to_string(m));
    const std::size_t n = n_cols - 1;
    if (n < 1) throw Error("no feature columns besides the target");

    FeatureMatrix features;
    features.values.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            features.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    for (std::size_t c = 0; c < n_cols; ++c)
        if (c != target_idx) features.feature_names.push_back(header[c]);

    Target target;
    target.kind = target_kind;
    if (target_kind == TargetKind::Continuous) {
        target.continuous_values.resize(static_cast<Eigen::Index>(m));
        for (std::size_t r = 0; r < m; ++r) {
            double v = 0.0;
            if (!parse_cell(target_cells[r], v))
                throw MissingValueError("line " + std::to_string(r + 2) +
                                        ": missing or unparsable target value");
            target.continuous_values[static_cast<Eigen::Index>(r)] = v;
        }
    } else {
        // Contiguous ids in first-appearance order.
        std::unordered_map<std::string, int> ids;
        for (const auto& cell : target_cells) {
            if (cell.empty())
                throw MissingValueError("empty target label");
            auto [pos, inserted] = ids.try_emplace(cell, static_cast<int>(ids.size()));
            target.labels.push_back(pos->second);
        }
        target.class_count = static_cast<int>(ids.size());
    }

    features.validate();
    target.validate();
    return {std::move(features), std::move(target)};
}

void write_csv(const std::string& path, const FeatureMatrix& features,
               const Target& target, const std::string& target_name) {
    if (features.sample_count() != target.sample_count())
        throw LengthMismatchError("feature and target sample counts differ");
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    for (const auto& name : features.feature_names) out << name << ',';
    out << target_name << '\n';
    const Eigen::Index m = features.sample_count();
    const Eigen::Index n = features.feature_count();
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) out << format_double(features.values(r, c)) << ',';
        if (target.kind == TargetKind::Continuous)
            out << format_double(target.continuous_values[r]);
        else
            out << target.labels[static_cast<std::size_t>(r)];
        out << '\n';
    }
}

std::pair<FeatureMatrix, StandardizationRecord> standardize(const FeatureMatrix& m) {
    if (m.sample_count() < 2) throw TooFewSamplesError("standardize needs at least 2 samples");
    const double samples = static_cast<double>(m.sample_count());
    StandardizationRecord record;
    record.means = m.values.colwise().mean();
    Eigen::MatrixXd centered = m.values.rowwise() - record.means.transpose();
    record.std_devs = (centered.array().square().colwise().sum() / samples).sqrt();
    record.applied = true;

    FeatureMatrix out;
    out.feature_names = m.feature_names;
    out.values = centered;
    for (Eigen::Index c = 0; c < m.feature_count(); ++c) {
        double sd = record.std_devs[c];
        if (sd > 0.0)
            out.values.col(c) /= sd;
        else
            out.values.col(c).setZero(); // constant feature
    }
    return {std::move(out), std::move(record)};
}

Eigen::VectorXd class_means(const Eigen::VectorXd& feature, const Target& target) {
    if (target.kind != TargetKind::Discrete)
        throw Error("class_means requires a discrete target");
    if (feature.size() != target.sample_count())
        throw LengthMismatchError("feature and target sample counts differ");

    Eigen::VectorXd sums = Eigen::VectorXd::Zero(target.class_count);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(target.class_count);
    for (Eigen::Index a = 0; a < feature.size(); ++a) {
        int c = target.labels[static_cast<std::size_t>(a)];
        sums[c] += feature[a];
        counts[c] += 1.0;
    }
    Eigen::VectorXd out(feature.size());
    for (Eigen::Index a = 0; a < feature.size(); ++a) {
        int c = target.labels[static_cast<std::size_t>(a)];
        out[a] = sums[c] / counts[c];
    }
    return out;
}

} // namespace structnet
