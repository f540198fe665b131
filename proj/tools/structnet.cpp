// structnet command line tool: load a dataset, build the feature-interaction
// matrix, solve the regression model, rank features, and evaluate selections.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "structnet/dataset.hpp"
#include "structnet/errors.hpp"
#include "structnet/evaluation.hpp"
#include "structnet/feature_graph.hpp"
#include "structnet/format.hpp"
#include "structnet/info_theory.hpp"
#include "structnet/selection.hpp"
#include "structnet/solver.hpp"
#include "structnet/synthetic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace structnet;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

// Everything needed to reproduce a run; echoed verbatim into the output JSON.
struct RunManifest {
    std::string input;
    std::string target;
    std::string target_kind = "discrete";
    std::string method = "inelasticnet";
    SolverConfig solver;
    unsigned seed = 0;
    bool standardize = true;
    bool zero_diagonal = false;
    std::string output;

    json to_json() const {
        json doc;
        doc["input"] = input;
        doc["target"] = target;
        doc["target_kind"] = target_kind;
        doc["method"] = method;
        doc["solver"] = {{"lambda1", solver.lambda1}, {"lambda2", solver.lambda2},
                         {"lambda3", solver.lambda3}, {"rho", solver.rho},
                         {"max_iter", solver.max_iter}, {"eps_abs", solver.eps_abs},
                         {"eps_rel", solver.eps_rel}};
        doc["seed"] = seed;
        doc["standardize"] = standardize;
        doc["zero_diagonal"] = zero_diagonal;
        doc["output"] = output;
        return doc;
    }
};

TargetKind parse_target_kind(const std::string& kind) {
    if (kind == "continuous") return TargetKind::Continuous;
    if (kind == "discrete") return TargetKind::Discrete;
    throw Error("unknown target kind: " + kind + " (expected continuous or discrete)");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << text;
}

void log_written(const std::string& path) {
    if (path.empty()) return;
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%FT%T", std::localtime(&now));
    std::cerr << "structnet: wrote " << path << " (" << stamp << ")\n";
}

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg) {
    cmd->add_option("--lambda1", cfg.lambda1, "l1 penalty weight");
    cmd->add_option("--lambda2", cfg.lambda2, "l2 penalty weight");
    cmd->add_option("--lambda3", cfg.lambda3, "interaction reward weight");
    cmd->add_option("--rho", cfg.rho, "ADMM penalty parameter");
    cmd->add_option("--max-iter", cfg.max_iter, "iteration cap");
    cmd->add_option("--eps-abs", cfg.eps_abs, "absolute tolerance");
    cmd->add_option("--eps-rel", cfg.eps_rel, "relative tolerance");
}

// select / baseline pipeline: load, standardize, (optionally) build W,
// solve, rank, write one JSON document.
int run_selection(const RunManifest& manifest) {
    LoadedDataset loaded =
        load_csv(manifest.input, manifest.target, parse_target_kind(manifest.target_kind));
    FeatureMatrix features = loaded.features;
    if (manifest.standardize) features = standardize(features).first;

    const SelectionMethod method = parse_selection_method(manifest.method);
    const Eigen::MatrixXd design = features.design_matrix();
    const Eigen::VectorXd y = loaded.target.as_regression_vector();

    SolverResult result;
    if (method == SelectionMethod::InElasticNet) {
        InteractionOptions options;
        options.zero_diagonal = manifest.zero_diagonal;
        options.warn_if_unstandardized = !manifest.standardize;
        InteractionMatrix im = build_interaction_matrix(features, loaded.target, options);
        result = solve(design, y, &im.w, manifest.solver);
    } else {
        BaselineKind kind = method == SelectionMethod::Ridge ? BaselineKind::Ridge
                            : method == SelectionMethod::Lasso ? BaselineKind::Lasso
                                                               : BaselineKind::ElasticNet;
        result = solve_baseline(kind, design, y, manifest.solver);
    }

    SelectionReport report = rank_features(result.beta_star);
    report.method = method;
    report.config = manifest.solver;

    json doc;
    doc["manifest"] = manifest.to_json();
    doc["solver_result"] = json::parse(solver_result_to_json(result));
    doc["selection"] = json::parse(selection_report_to_json(report));
    doc["feature_names"] = features.feature_names;
    write_text(manifest.output, doc.dump(2) + "\n");
    log_written(manifest.output);

    return result.converged ? kExitOk : kExitNotConverged;
}

int run_matrix(const RunManifest& manifest, const std::string& format, bool dump_graphs) {
    LoadedDataset loaded =
        load_csv(manifest.input, manifest.target, parse_target_kind(manifest.target_kind));
    FeatureMatrix features = loaded.features;
    if (manifest.standardize) features = standardize(features).first;

    InteractionOptions options;
    options.zero_diagonal = manifest.zero_diagonal;
    options.warn_if_unstandardized = !manifest.standardize;
    InteractionMatrix im = build_interaction_matrix(features, loaded.target, options);

    if (format == "json") {
        write_text(manifest.output, interaction_to_json(im));
    } else if (format == "csv") {
        std::ostringstream csv;
        write_interaction_csv(csv, im);
        write_text(manifest.output, csv.str());
    } else {
        throw Error("unknown format: " + format + " (expected csv or json)");
    }
    log_written(manifest.output);

    if (dump_graphs) {
        if (manifest.output.empty())
            throw Error("--dump-graphs requires --output to name the dump files");
        for (Eigen::Index i = 0; i < features.feature_count(); ++i) {
            FeatureGraph graph = build_feature_graph(features.values.col(i));
            std::string path = manifest.output + ".graph_" + std::to_string(i) + ".csv";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw Error("cannot open file for writing: " + path);
            write_weights_csv(out, graph.weights);
        }
        std::cerr << "structnet: dumped " << features.feature_count() << " graph matrices\n";
    }
    return kExitOk;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoi(item));
    }
    return values;
}

std::vector<std::string> parse_name_list(const std::string& csv) {
    std::vector<std::string> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(item);
    }
    return values;
}

struct BenchOptions {
    int seeds = 3;
    std::string k_list = "1,2,5,10,20";
    std::string methods = "lasso,elasticnet,inelasticnet";
    SyntheticSpec generator;
    int folds = 10;
    int k_neighbors = 5;
    SolverConfig solver;
    std::string output = "bench";
};

int run_bench(const BenchOptions& options) {
    const std::vector<int> k_list = parse_int_list(options.k_list);
    const std::vector<std::string> methods = parse_name_list(options.methods);
    if (methods.empty()) throw Error("no methods given");
    if (options.seeds < 1) throw Error("--seeds must be >= 1");

    json summary;
    summary["seeds"] = options.seeds;
    summary["k_list"] = k_list;
    summary["generator"] = {{"n_relevant", options.generator.n_relevant},
                            {"n_noise", options.generator.n_noise},
                            {"n_duplicates_per_relevant", options.generator.n_duplicates_per_relevant},
                            {"correlation", options.generator.correlation},
                            {"samples", options.generator.sample_count}};
    json per_method = json::object();

    for (const std::string& name : methods) {
        SelectionMethod method = parse_selection_method(name);
        // per (k): mean over seeds of fold-mean accuracies
        std::vector<std::vector<double>> means(k_list.size());
        std::vector<double> first_seed_std(k_list.size(), 0.0);
        int folds_used = options.folds;
        for (int s = 0; s < options.seeds; ++s) {
            SyntheticSpec spec = options.generator;
            spec.seed = static_cast<unsigned>(s);
            SyntheticDataset dataset = synthetic_benchmark(spec);
            FeatureMatrix features = standardize(dataset.features).first;

            CrossValConfig cv;
            cv.folds = options.folds;
            cv.k_neighbors = options.k_neighbors;
            cv.seed = static_cast<unsigned>(s);
            cv.interaction.warn_if_unstandardized = false;
            EvalReport report =
                accuracy_curve(features, dataset.target, method, k_list, options.solver, cv);
            folds_used = report.folds;
            for (std::size_t i = 0; i < report.per_k.size(); ++i) {
                means[i].push_back(report.per_k[i].mean_accuracy);
                if (s == 0) first_seed_std[i] = report.per_k[i].std_dev;
            }
        }

        // std across seeds when there are several, across folds otherwise
        EvalReport pooled;
        pooled.folds = folds_used;
        pooled.classifier = "knn(k=" + std::to_string(options.k_neighbors) + ")";
        for (std::size_t i = 0; i < k_list.size(); ++i) {
            double mean = 0.0;
            for (double v : means[i]) mean += v;
            mean /= static_cast<double>(means[i].size());
            double sd = first_seed_std[i];
            if (options.seeds > 1) {
                double var = 0.0;
                for (double v : means[i]) var += (v - mean) * (v - mean);
                sd = std::sqrt(var / static_cast<double>(means[i].size()));
            }
            pooled.per_k.push_back({k_list[i], mean, sd});
        }

        std::string csv_path = options.output + "_" + name + ".csv";
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw Error("cannot open file for writing: " + csv_path);
        write_eval_csv(csv, pooled);
        log_written(csv_path);
        per_method[name] = json::parse(eval_report_to_json(pooled));

        std::cout << name << ":";
        for (const auto& point : pooled.per_k)
            std::cout << "  k=" << point.k << " acc=" << point.mean_accuracy;
        std::cout << "\n";
    }

    summary["methods"] = std::move(per_method);
    std::string json_path = options.output + ".json";
    write_text(json_path, summary.dump(2) + "\n");
    log_written(json_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-based feature selection via a structurally interacting elastic net"};
    app.require_subcommand(1);

    RunManifest manifest;
    std::string matrix_format = "csv";
    bool dump_graphs = false;
    bool no_standardize = false;
    BenchOptions bench;

    CLI::App* select = app.add_subcommand("select", "run the full selection pipeline");
    select->add_option("--input", manifest.input, "input CSV path")->required();
    select->add_option("--target", manifest.target, "target column name or index")->required();
    select->add_option("--target-kind", manifest.target_kind, "continuous|discrete");
    add_solver_flags(select, manifest.solver);
    select->add_flag("--no-standardize", no_standardize, "skip feature standardization");
    select->add_flag("--zero-diagonal", manifest.zero_diagonal, "null the W diagonal");
    select->add_option("--output", manifest.output, "output JSON path (default stdout)");
    select->add_option("--seed", manifest.seed, "seed echoed into the manifest");

    CLI::App* matrix = app.add_subcommand("matrix", "compute and export the interaction matrix");
    matrix->add_option("--input", manifest.input, "input CSV path")->required();
    matrix->add_option("--target", manifest.target, "target column name or index")->required();
    matrix->add_option("--target-kind", manifest.target_kind, "continuous|discrete");
    matrix->add_option("--format", matrix_format, "csv|json");
    matrix->add_flag("--dump-graphs", dump_graphs, "also dump per-feature weight matrices");
    matrix->add_flag("--no-standardize", no_standardize, "skip feature standardization");
    matrix->add_flag("--zero-diagonal", manifest.zero_diagonal, "null the W diagonal");
    matrix->add_option("--output", manifest.output, "output path (default stdout)");

    CLI::App* baseline = app.add_subcommand("baseline", "ridge / lasso / elastic net only");
    baseline->add_option("--method", manifest.method, "ridge|lasso|elasticnet")->required();
    baseline->add_option("--input", manifest.input, "input CSV path")->required();
    baseline->add_option("--target", manifest.target, "target column name or index")->required();
    baseline->add_option("--target-kind", manifest.target_kind, "continuous|discrete");
    add_solver_flags(baseline, manifest.solver);
    baseline->add_flag("--no-standardize", no_standardize, "skip feature standardization");
    baseline->add_option("--output", manifest.output, "output JSON path (default stdout)");
    baseline->add_option("--seed", manifest.seed, "seed echoed into the manifest");

    CLI::App* bench_cmd = app.add_subcommand("bench", "synthetic recovery benchmark");
    bench_cmd->add_option("--seeds", bench.seeds, "number of seeds (0..seeds-1)");
    bench_cmd->add_option("--k-list", bench.k_list, "comma-separated subset sizes");
    bench_cmd->add_option("--methods", bench.methods, "comma-separated method names");
    bench_cmd->add_option("--correlation", bench.generator.correlation, "duplicate correlation");
    bench_cmd->add_option("--n-relevant", bench.generator.n_relevant, "relevant feature count");
    bench_cmd->add_option("--n-noise", bench.generator.n_noise, "noise feature count");
    bench_cmd->add_option("--duplicates", bench.generator.n_duplicates_per_relevant,
                          "duplicates per relevant feature");
    bench_cmd->add_option("--samples", bench.generator.sample_count, "sample count");
    bench_cmd->add_option("--folds", bench.folds, "cross-validation folds");
    bench_cmd->add_option("--k-neighbors", bench.k_neighbors, "k-NN neighbor count");
    add_solver_flags(bench_cmd, bench.solver);
    bench_cmd->add_option("--output", bench.output, "output stem for CSV/JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "structnet: " << e.what() << "\n" << app.help();
        return kExitError;
    }

    manifest.standardize = !no_standardize;

    try {
        if (select->parsed()) {
            manifest.method = "inelasticnet";
            return run_selection(manifest);
        }
        if (matrix->parsed()) return run_matrix(manifest, matrix_format, dump_graphs);
        if (baseline->parsed()) {
            if (manifest.method == "inelasticnet")
                throw Error("unknown method: inelasticnet is the select subcommand; "
                            "baseline takes ridge, lasso, or elasticnet");
            return run_selection(manifest);
        }
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const Error& e) {
        std::cerr << "structnet: error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "structnet: unexpected error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
