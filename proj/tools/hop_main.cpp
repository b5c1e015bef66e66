// hop: higher-order simplex prediction over time-sliced complexes.
//
// Subcommands: predict (rank candidate vertices for a d-simplex),
// evaluate (AUC protocol vs heuristic baselines), validate (Monte Carlo
// checks of the estimator's consistency and asymptotic normality).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hop/error.hpp"
#include "hop/estimator.hpp"
#include "hop/evaluation.hpp"
#include "hop/feature.hpp"
#include "hop/ingestion.hpp"
#include "hop/neighborhood.hpp"
#include "hop/synthetic.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInsufficient = 4;

struct DataFlags {
    std::string stem;      // three-file dataset: <stem>-nverts.txt etc.
    std::string arrivals;  // normalized single-file format
    std::int32_t T = 20;
};

void add_data_flags(CLI::App* cmd, DataFlags& flags) {
    auto* stem = cmd->add_option("--data", flags.stem,
                                 "dataset stem; reads <stem>-nverts.txt, <stem>-simplices.txt, "
                                 "<stem>-times.txt");
    auto* arr = cmd->add_option("--arrivals", flags.arrivals,
                                "normalized arrival file: one 'timestamp v1 v2 ...' line per arrival");
    stem->excludes(arr);
    cmd->add_option("--T", flags.T, "number of time slices")->check(CLI::PositiveNumber);
}

hop::Filtration load_filtration(const DataFlags& flags) {
    if (flags.stem.empty() && flags.arrivals.empty()) {
        throw CLI::ValidationError("--data or --arrivals is required");
    }
    hop::ArrivalLog log;
    if (!flags.stem.empty()) {
        log = hop::load_dataset(flags.stem + "-nverts.txt", flags.stem + "-simplices.txt",
                                flags.stem + "-times.txt");
    } else {
        std::ifstream in(flags.arrivals);
        if (!in) throw hop::Error(hop::Errc::kMalformedDataset, "cannot open " + flags.arrivals);
        log = hop::load_arrival_log(in);
    }
    return hop::slice(log, flags.T);
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::vector<int> parse_int_grid(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

hop::Simplex parse_simplex(const std::string& text) {
    std::vector<hop::VertexId> verts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) verts.push_back(static_cast<hop::VertexId>(std::stol(item)));
    }
    return hop::make_simplex(verts);
}

int exit_code_for(const hop::Error& e) {
    switch (e.code()) {
        case hop::Errc::kInsufficientData:
        case hop::Errc::kInsufficientSlices:
        case hop::Errc::kInsufficientPositives:
        case hop::Errc::kInsufficientNegatives:
            return kExitInsufficient;
        default:
            return kExitData;
    }
}

struct PredictOptions {
    DataFlags data;
    std::string save_arrivals;
    int d = 1;
    int k = 1;
    int D = -1;
    double beta = 1.0;
    long long delta = 1;
    std::string simplex_text;
    int top = 0;
    double ci_level = 0.0;
    int n_boot = 200;
    std::uint64_t seed = 1;
    int jobs = 0;
    std::string save_index;
    std::string load_index_path;
};

int run_predict(const PredictOptions& opt) {
    if (!opt.save_arrivals.empty()) {
        hop::ArrivalLog log;
        if (!opt.data.stem.empty()) {
            log = hop::load_dataset(opt.data.stem + "-nverts.txt", opt.data.stem + "-simplices.txt",
                                    opt.data.stem + "-times.txt");
        } else if (!opt.data.arrivals.empty()) {
            std::ifstream in(opt.data.arrivals);
            if (!in) throw hop::Error(hop::Errc::kMalformedDataset, "cannot open " + opt.data.arrivals);
            log = hop::load_arrival_log(in);
        } else {
            throw CLI::ValidationError("--data or --arrivals is required");
        }
        std::ofstream out(opt.save_arrivals);
        if (!out) throw hop::Error(hop::Errc::kMalformedDataset, "cannot write " + opt.save_arrivals);
        hop::save_arrival_log(log, out);
    }
    const hop::Filtration f = load_filtration(opt.data);
    const std::int32_t query_slice = f.num_slices() - 1;
    const std::int32_t anchor = query_slice - 1;
    if (anchor < 1) throw hop::Error(hop::Errc::kInvalidArgument, "need at least 3 slices");
    const int D = opt.D < 0 ? opt.d + 2 : opt.D;

    hop::FeatureIndex index;
    if (!opt.load_index_path.empty()) {
        std::ifstream in(opt.load_index_path);
        if (!in) throw hop::Error(hop::Errc::kMalformedDataset, "cannot open " + opt.load_index_path);
        index = hop::load_index(in);
        if (index.d != opt.d || index.k != opt.k || index.D != D) {
            throw hop::Error(hop::Errc::kDimensionMismatch,
                             "loaded index was built for different (d, k, D)");
        }
    } else {
        index = hop::build_index(f, anchor, anchor, opt.d, opt.k, D, opt.jobs);
    }
    if (!opt.save_index.empty()) {
        std::ofstream out(opt.save_index);
        if (!out) throw hop::Error(hop::Errc::kMalformedDataset, "cannot write " + opt.save_index);
        hop::dump_index(index, out);
    }

    const hop::KernelParams params{opt.beta, static_cast<hop::Count>(opt.delta)};
    const auto& snap = f.snapshots[static_cast<std::size_t>(query_slice)];
    const auto& store = f.cooccurrence[static_cast<std::size_t>(query_slice)];

    std::vector<hop::Simplex> queries;
    if (!opt.simplex_text.empty()) {
        queries.push_back(parse_simplex(opt.simplex_text));
        if (!snap.contains(queries.back())) {
            throw hop::Error(hop::Errc::kSimplexNotPresent, "query simplex not in the final slice");
        }
        if (queries.back().dimension() != opt.d) {
            throw hop::Error(hop::Errc::kInvalidDimension, "query simplex does not have dimension d");
        }
    } else {
        queries = hop::simplices_of_dim(snap, opt.d);
    }

    std::cout << "simplex\tcandidate\testimate";
    if (opt.ci_level > 0.0) std::cout << "\tci_lo\tci_hi";
    std::cout << "\n";

    for (const hop::Simplex& sigma : queries) {
        const hop::KBall ball = hop::k_ball_simplex(snap, sigma, opt.k);
        const hop::FaceVector prefix = hop::induced_f_vector(snap, ball.members, D);

        struct Row {
            hop::VertexId candidate;
            double est;
            hop::Interval iv;
        };
        std::vector<Row> rows;
        for (hop::VertexId v : ball.members) {
            if (sigma.contains_vertex(v)) continue;
            const hop::FeatureVector F = hop::concat_feature(prefix, hop::score(store, sigma, v));
            Row row{v, hop::estimate(index, F, params), {}};
            if (opt.ci_level > 0.0) {
                row.iv =
                    hop::confidence_interval(index, F, params, opt.ci_level, opt.n_boot, opt.seed);
            }
            rows.push_back(row);
        }
        std::stable_sort(rows.begin(), rows.end(),
                         [](const Row& a, const Row& b) { return a.est > b.est; });
        if (opt.top > 0 && static_cast<int>(rows.size()) > opt.top) {
            rows.resize(static_cast<std::size_t>(opt.top));
        }
        std::string name;
        for (hop::VertexId v : sigma.vertices()) {
            if (!name.empty()) name += ',';
            name += std::to_string(v);
        }
        for (const Row& row : rows) {
            std::cout << name << '\t' << row.candidate << '\t' << row.est;
            if (opt.ci_level > 0.0) std::cout << '\t' << row.iv.lo << '\t' << row.iv.hi;
            std::cout << "\n";
        }
    }
    return 0;
}

struct EvaluateOptions {
    DataFlags data;
    hop::ExperimentConfig cfg;
    std::string method = "ours";
    std::string beta_grid_text = "0.01,0.1,1,10";
    bool json = false;
};

int run_evaluate(const EvaluateOptions& opt) {
    const hop::Filtration f = load_filtration(opt.data);
    hop::ExperimentConfig cfg = opt.cfg;
    cfg.method = hop::method_from_name(opt.method);
    cfg.beta_grid = parse_grid(opt.beta_grid_text);

    const hop::EvalReport report = hop::run_experiment(f, cfg);
    if (opt.json) {
        std::cout << hop::to_json(report) << "\n";
    } else {
        std::cout << "method\tauc\truntime_seconds\tbeta_selected\tn_samples\trepeats\n";
        std::cout << opt.method << '\t' << report.auc << '\t' << report.runtime_seconds << '\t'
                  << report.beta_selected << '\t' << report.n_samples << '\t' << report.repeats
                  << "\n";
    }
    return 0;
}

struct ValidateOptions {
    hop::SyntheticConfig cfg;
    double g_below = 0.25;
    double g_at_or_above = 0.0;
    long long g_threshold = 2;
    std::string t_grid_text = "25,100,400";
    int replicates = 50;
    double fixed_beta = -1.0;  // < 0: beta = 1/T
    int T = 500;
};

hop::SyntheticConfig finish_config(const ValidateOptions& opt) {
    hop::SyntheticConfig cfg = opt.cfg;
    cfg.ground_truth = hop::GroundTruth::score_step(opt.g_below, opt.g_at_or_above,
                                                    static_cast<hop::Count>(opt.g_threshold));
    return cfg;
}

int run_validate_consistency(const ValidateOptions& opt) {
    const auto grid = parse_int_grid(opt.t_grid_text);
    std::optional<double> fixed;
    if (opt.fixed_beta >= 0.0) fixed = opt.fixed_beta;
    const auto rows = hop::consistency_experiment(finish_config(opt), grid, opt.replicates, fixed);
    std::cout << "T,mean_abs_error\n";
    for (const auto& row : rows) std::cout << row.T << ',' << row.mean_abs_error << "\n";
    return 0;
}

int run_validate_normality(const ValidateOptions& opt) {
    const hop::NormalityResult res =
        hop::normality_experiment(finish_config(opt), opt.T, opt.replicates);
    std::cout << "replicate,z_value\n";
    for (std::size_t i = 0; i < res.z_values.size(); ++i) {
        std::cout << i << ',' << res.z_values[i] << "\n";
    }
    std::cerr << "ks_statistic=" << res.ks_statistic << " p_value=" << res.p_value
              << " empirical_variance=" << res.empirical_variance << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher-order simplex arrival prediction"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read flags from a key=value file");

    PredictOptions predict;
    auto* cmd_predict = app.add_subcommand(
        "predict", "rank candidate vertices for (d+1)-simplex arrival at the next slice");
    cmd_predict->configurable();
    add_data_flags(cmd_predict, predict.data);
    cmd_predict->add_option("--d", predict.d, "simplex dimension d")->check(CLI::PositiveNumber);
    cmd_predict->add_option("--k", predict.k, "ball radius")->check(CLI::NonNegativeNumber);
    cmd_predict->add_option("--D", predict.D, "face-vector length (default d+2)");
    cmd_predict->add_option("--beta", predict.beta, "kernel bandwidth")->check(CLI::NonNegativeNumber);
    cmd_predict->add_option("--delta", predict.delta, "kernel L1 radius")
        ->check(CLI::NonNegativeNumber);
    cmd_predict->add_option("--simplex", predict.simplex_text,
                            "comma-separated vertex ids; omit to rank for every d-simplex");
    cmd_predict->add_option("--top", predict.top, "print at most this many candidates per simplex");
    auto* ci_opt = cmd_predict->add_option("--ci", predict.ci_level,
                                           "bootstrap confidence level, e.g. 0.9 (0 disables)");
    cmd_predict->add_option("--boot", predict.n_boot, "bootstrap replicates");
    cmd_predict->add_option("--seed", predict.seed, "random seed");
    cmd_predict->add_option("--jobs", predict.jobs, "worker threads (0 = hardware)");
    cmd_predict->add_option("--save-index", predict.save_index, "dump the feature index to a file");
    cmd_predict->add_option("--save-arrivals", predict.save_arrivals,
                            "write the sorted arrival log in the normalized one-line-per-arrival format");
    auto* load_opt = cmd_predict->add_option("--load-index", predict.load_index_path,
                                             "reuse a dumped feature index instead of building");
    load_opt->excludes(ci_opt);  // a dumped index has no per-slice layers to bootstrap

    EvaluateOptions evaluate;
    auto* cmd_evaluate =
        app.add_subcommand("evaluate", "AUC protocol: balanced sampling, CV over beta, repeats");
    cmd_evaluate->configurable();
    add_data_flags(cmd_evaluate, evaluate.data);
    cmd_evaluate->add_option("--d", evaluate.cfg.d, "simplex dimension d")->check(CLI::PositiveNumber);
    cmd_evaluate->add_option("--k", evaluate.cfg.k, "ball radius")->check(CLI::NonNegativeNumber);
    cmd_evaluate->add_option("--D", evaluate.cfg.D, "face-vector length (default d+2)");
    cmd_evaluate->add_option("--delta", evaluate.cfg.delta, "kernel L1 radius");
    cmd_evaluate->add_option("--method", evaluate.method, "ours|aa|jc|pa");
    cmd_evaluate->add_option("--beta-grid", evaluate.beta_grid_text, "comma-separated bandwidths");
    cmd_evaluate->add_option("--cv-k", evaluate.cfg.cv_folds, "cross-validation folds");
    cmd_evaluate->add_option("--n-per-class", evaluate.cfg.n_per_class, "samples per class");
    cmd_evaluate->add_option("--repeats", evaluate.cfg.repeats, "experiment repeats");
    cmd_evaluate->add_option("--seed", evaluate.cfg.seed, "random seed");
    cmd_evaluate->add_option("--jobs", evaluate.cfg.jobs, "worker threads (0 = hardware)");
    cmd_evaluate->add_flag("--json", evaluate.json, "emit a single JSON record");

    ValidateOptions validate;
    auto* cmd_validate =
        app.add_subcommand("validate", "Monte Carlo checks of the estimator's guarantees");
    cmd_validate->require_subcommand(1);
    auto* cmd_consistency = cmd_validate->add_subcommand(
        "consistency", "mean |estimate - g| over a grid of horizon lengths, beta = 1/T");
    auto* cmd_normality = cmd_validate->add_subcommand(
        "normality", "KS test of sqrt(T)(estimate - g) against the standard normal");
    for (CLI::App* sub : {cmd_consistency, cmd_normality}) {
        sub->add_option("--replicates", validate.replicates, "Monte Carlo replicates");
        sub->add_option("--seed", validate.cfg.seed, "random seed");
        sub->add_option("--d", validate.cfg.d, "simplex dimension d");
        sub->add_option("--k", validate.cfg.k, "ball radius");
        sub->add_option("--n-vertices", validate.cfg.n_vertices, "vertex pool cap");
        sub->add_option("--birth-period", validate.cfg.birth_period, "slices between pod births");
        sub->add_option("--pods-per-birth", validate.cfg.pods_per_birth, "pods per birth event");
        sub->add_option("--start-pods", validate.cfg.start_pods, "pods in the start snapshot");
        sub->add_option("--heavy-fraction", validate.cfg.heavy_fraction,
                        "fraction of pods with a double-weight antenna");
        sub->add_option("--g-low", validate.g_below, "arrival probability below the score step");
        sub->add_option("--g-high", validate.g_at_or_above, "arrival probability at/above the step");
        sub->add_option("--g-threshold", validate.g_threshold, "score step location");
    }
    cmd_consistency->add_option("--T-grid", validate.t_grid_text, "comma-separated horizons");
    cmd_consistency->add_option("--beta", validate.fixed_beta,
                                "fixed bandwidth (omit for the 1/T schedule)");
    cmd_normality->add_option("--T", validate.T, "horizon length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_predict->parsed()) return run_predict(predict);
        if (cmd_evaluate->parsed()) return run_evaluate(evaluate);
        if (cmd_consistency->parsed()) return run_validate_consistency(validate);
        if (cmd_normality->parsed()) return run_validate_normality(validate);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const hop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
