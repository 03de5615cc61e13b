// Command-line front end: change-point detection on CSV panels, the
// simulation experiments, and Monte-Carlo threshold calibration.

#include "groupinspect/baselines.hpp"
#include "groupinspect/cusum.hpp"
#include "groupinspect/errors.hpp"
#include "groupinspect/harness.hpp"
#include "groupinspect/io.hpp"
#include "groupinspect/metrics.hpp"
#include "groupinspect/preprocess.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace gi = groupinspect;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumerical = 4;

// Calibration draws from a seed block away from the replicate seeds.
constexpr std::uint64_t kCalibrationSeedOffset = 0x10000000ULL;

struct LambdaChoice {
    std::string mode = "practical"; // practical | theoretical | explicit
    double value = -1.0;

    double resolve(int n, int num_groups, int min_group_size) const {
        if (mode == "practical") return gi::practical_lambda(n, num_groups, min_group_size);
        if (mode == "theoretical") return gi::theoretical_lambda(n, num_groups, min_group_size);
        if (value < 0.0)
            throw gi::ConfigError("--lambda-mode explicit requires --lambda >= 0");
        return value;
    }
};

void add_lambda_flags(CLI::App* cmd, LambdaChoice& choice) {
    cmd->add_option("--lambda-mode", choice.mode, "Penalty rule: practical|theoretical|explicit")
        ->check(CLI::IsMember({"practical", "theoretical", "explicit"}));
    cmd->add_option("--lambda", choice.value, "Penalty level when --lambda-mode explicit");
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gi::ConfigError("cannot open output file " + path.string());
    return out;
}

std::string csv_double(double value) {
    if (std::isnan(value)) return "";
    return gi::format_double(value);
}

// ---------------------------------------------------------------- detect ---

struct DetectOptions {
    std::string data_path;
    std::string groups_path;
    std::string mode = "multi"; // single | multi
    bool no_standardize = false;
    LambdaChoice lambda;
    int num_intervals = 1000;
    std::optional<double> xi;
    bool auto_xi = false;
    int n_null = 1000;
    double quantile = 1.0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string output_dir = ".";
};

void write_direction_csv(std::ostream& out, const std::vector<std::string>& names,
                         const std::vector<gi::Vector>& directions) {
    for (std::size_t c = 0; c < names.size(); ++c)
        out << (c ? "," : "") << gi::csv_quote(names[c]);
    out << '\n';
    if (directions.empty()) return;
    const Eigen::Index p = directions.front().size();
    for (Eigen::Index j = 0; j < p; ++j) {
        for (std::size_t c = 0; c < directions.size(); ++c)
            out << (c ? "," : "")
                << (directions[c].size() == p ? gi::format_double(directions[c][j]) : "");
        out << '\n';
    }
}

int cmd_detect(const DetectOptions& opt) {
    const gi::Matrix X = gi::read_csv_matrix_file(opt.data_path);
    const int p = static_cast<int>(X.rows());
    const int n = static_cast<int>(X.cols());
    const gi::Grouping grouping = gi::read_grouping_json_file(opt.groups_path, p);

    gi::Matrix Xs = X;
    if (!opt.no_standardize) Xs = gi::standardize(X, gi::estimate_row_sd(X));
    const double lambda = opt.lambda.resolve(n, grouping.num_groups(), grouping.min_group_size());

    std::filesystem::create_directories(opt.output_dir);
    const std::filesystem::path dir(opt.output_dir);

    gi::Segmentation seg;
    if (opt.mode == "single") {
        const gi::SingleCpResult res = gi::single_changepoint(Xs, grouping, lambda);
        if (!res.degenerate) {
            seg.change_points = {res.z_hat};
            seg.interval_log.push_back({0, n, res.z_hat, res.t_max, res.v_hat.v_hat});
        }
        // Per-candidate projected statistic and the estimated direction.
        auto diag = open_output(dir / "diagnostics.csv");
        diag << "t,projected_statistic\n";
        if (!res.degenerate) {
            const gi::Matrix T = gi::cusum_transform(Xs);
            const Eigen::RowVectorXd proj = res.v_hat.v_hat.transpose() * T;
            for (Eigen::Index t = 0; t < proj.size(); ++t)
                diag << (t + 1) << ',' << gi::format_double(std::abs(proj[t])) << '\n';
        }
        auto dirfile = open_output(dir / "direction.csv");
        if (!res.degenerate)
            write_direction_csv(dirfile, {"cp_" + std::to_string(res.z_hat)},
                                {res.v_hat.v_hat});
        else
            write_direction_csv(dirfile, {}, {});
    } else {
        double xi = 0.0;
        if (opt.auto_xi) {
            xi = gi::calibrate_threshold(n, p, grouping, lambda, opt.n_null, opt.quantile,
                                         opt.seed + kCalibrationSeedOffset, opt.threads);
        } else if (opt.xi) {
            xi = *opt.xi;
        } else {
            throw gi::ConfigError("multi-mode detection needs --xi or --auto-xi");
        }
        gi::WbsConfig config;
        config.num_intervals = opt.num_intervals;
        config.xi = xi;
        config.seed = opt.seed;
        config.threads = opt.threads;
        seg = gi::wbs_detect(Xs, grouping, lambda, config);

        auto diag = open_output(dir / "diagnostics.csv");
        diag << "s,e,b,statistic\n";
        for (const auto& rec : seg.interval_log)
            diag << rec.s << ',' << rec.e << ',' << rec.b << ','
                 << gi::format_double(rec.statistic) << '\n';
        std::vector<std::string> names;
        std::vector<gi::Vector> directions;
        for (const auto& rec : seg.interval_log) {
            names.push_back("cp_" + std::to_string(rec.b));
            directions.push_back(rec.direction);
        }
        auto dirfile = open_output(dir / "direction.csv");
        write_direction_csv(dirfile, names, directions);
    }

    open_output(dir / "segmentation.json") << gi::segmentation_to_json(seg, n) << '\n';
    auto csv = open_output(dir / "segmentation.csv");
    gi::write_segmentation_csv(csv, seg);
    return 0;
}

// -------------------------------------------------------------- simulate ---

struct SimulateOptions {
    std::string experiment = "compare"; // pstar | lambda | compare | multi
    std::string grid_path;              // optional JSON grid file
    int reps = -1;                      // overrides grid when >= 0
    std::uint64_t seed = 1;
    int threads = 0;
    std::string output_dir = ".";
    // inline grid values (used when no grid file given)
    int n = -1, p = -1, num_groups = -1, s = -1, z = -1, k = -1;
    std::vector<double> varthetas;
    int num_intervals = -1, n_null = -1;
};

template <typename T>
void maybe_set(const json& doc, const char* key, T& field) {
    if (doc.contains(key)) field = doc.at(key).get<T>();
}

json load_grid(const SimulateOptions& opt) {
    if (opt.grid_path.empty()) return json::object();
    std::ifstream in(opt.grid_path);
    if (!in) throw gi::ParseError(opt.grid_path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw gi::ParseError(opt.grid_path + ": " + e.what());
    }
}

int cmd_simulate(const SimulateOptions& opt) {
    const json grid = load_grid(opt);
    std::filesystem::create_directories(opt.output_dir);
    const std::filesystem::path dir(opt.output_dir);

    if (opt.experiment == "pstar") {
        gi::harness::PstarParams params;
        maybe_set(grid, "n", params.n);
        maybe_set(grid, "p", params.p);
        maybe_set(grid, "z", params.z);
        maybe_set(grid, "vartheta", params.vartheta);
        maybe_set(grid, "p_star_base", params.p_star_base);
        maybe_set(grid, "fixed_k", params.fixed_k);
        maybe_set(grid, "fixed_s", params.fixed_s);
        maybe_set(grid, "theoretical", params.theoretical);
        maybe_set(grid, "reps", params.reps);
        if (opt.n > 0) params.n = opt.n;
        if (opt.p > 0) params.p = opt.p;
        if (opt.z > 0) params.z = opt.z;
        if (opt.k > 0) params.fixed_k = opt.k;
        if (opt.s > 0) params.fixed_s = opt.s;
        if (!opt.varthetas.empty()) params.vartheta = opt.varthetas.front();
        if (opt.reps >= 0) params.reps = opt.reps;
        params.seed = opt.seed;
        params.threads = opt.threads;
        const auto rows = gi::harness::run_pstar(params);

        auto data = open_output(dir / "pstar_replicates.csv");
        data << "variant,n,p,z,vartheta,p_star,s,k,rep,seed,loss\n";
        for (const auto& r : rows)
            data << r.variant << ',' << params.n << ',' << params.p << ',' << params.z << ','
                 << csv_double(r.vartheta) << ',' << r.p_star << ',' << r.s << ',' << r.k
                 << ',' << r.rep << ',' << r.seed << ',' << csv_double(r.loss) << '\n';

        auto summary = open_output(dir / "pstar_summary.csv");
        summary << "variant,p_star,s,k,vartheta,reps,mean_loss\n";
        for (std::size_t i = 0; i < rows.size();) {
            std::size_t j = i;
            double sum = 0.0;
            while (j < rows.size() && rows[j].variant == rows[i].variant &&
                   rows[j].p_star == rows[i].p_star)
                sum += rows[j++].loss;
            summary << rows[i].variant << ',' << rows[i].p_star << ',' << rows[i].s << ','
                    << rows[i].k << ',' << csv_double(rows[i].vartheta) << ',' << (j - i)
                    << ',' << csv_double(sum / static_cast<double>(j - i)) << '\n';
            i = j;
        }
        return 0;
    }

    if (opt.experiment == "lambda") {
        gi::harness::LambdaSweepParams params;
        maybe_set(grid, "n", params.n);
        maybe_set(grid, "p", params.p);
        maybe_set(grid, "num_groups", params.num_groups);
        maybe_set(grid, "s", params.s);
        maybe_set(grid, "z", params.z);
        maybe_set(grid, "varthetas", params.varthetas);
        maybe_set(grid, "grid_size", params.grid_size);
        maybe_set(grid, "multiplier_lo", params.multiplier_lo);
        maybe_set(grid, "multiplier_hi", params.multiplier_hi);
        maybe_set(grid, "reps", params.reps);
        if (opt.n > 0) params.n = opt.n;
        if (opt.p > 0) params.p = opt.p;
        if (opt.num_groups > 0) params.num_groups = opt.num_groups;
        if (opt.s > 0) params.s = opt.s;
        if (opt.z > 0) params.z = opt.z;
        if (!opt.varthetas.empty()) params.varthetas = opt.varthetas;
        if (opt.reps >= 0) params.reps = opt.reps;
        params.seed = opt.seed;
        params.threads = opt.threads;
        const auto rows = gi::harness::run_lambda_sweep(params);

        auto data = open_output(dir / "lambda_replicates.csv");
        data << "n,p,G,s,z,vartheta,multiplier_index,multiplier,lambda,rep,seed,loss\n";
        for (const auto& r : rows)
            data << params.n << ',' << params.p << ',' << params.num_groups << ',' << params.s
                 << ',' << params.z << ',' << csv_double(r.vartheta) << ','
                 << r.multiplier_index << ',' << csv_double(r.multiplier) << ','
                 << csv_double(r.lambda) << ',' << r.rep << ',' << r.seed << ','
                 << csv_double(r.loss) << '\n';

        auto summary = open_output(dir / "lambda_summary.csv");
        summary << "vartheta,multiplier_index,multiplier,lambda,reps,mean_loss\n";
        for (std::size_t i = 0; i < rows.size();) {
            std::size_t j = i;
            double sum = 0.0;
            while (j < rows.size() && rows[j].vartheta == rows[i].vartheta &&
                   rows[j].multiplier_index == rows[i].multiplier_index)
                sum += rows[j++].loss;
            summary << csv_double(rows[i].vartheta) << ',' << rows[i].multiplier_index << ','
                    << csv_double(rows[i].multiplier) << ',' << csv_double(rows[i].lambda)
                    << ',' << (j - i) << ',' << csv_double(sum / static_cast<double>(j - i))
                    << '\n';
            i = j;
        }
        return 0;
    }

    if (opt.experiment == "compare") {
        gi::harness::CompareParams params;
        maybe_set(grid, "n", params.n);
        maybe_set(grid, "num_groups", params.num_groups);
        maybe_set(grid, "s", params.s);
        maybe_set(grid, "z", params.z);
        maybe_set(grid, "ps", params.ps);
        maybe_set(grid, "varthetas", params.varthetas);
        maybe_set(grid, "reps", params.reps);
        if (opt.n > 0) params.n = opt.n;
        if (opt.num_groups > 0) params.num_groups = opt.num_groups;
        if (opt.s > 0) params.s = opt.s;
        if (opt.z > 0) params.z = opt.z;
        if (opt.p > 0) params.ps = {opt.p};
        if (!opt.varthetas.empty()) params.varthetas = opt.varthetas;
        if (opt.reps >= 0) params.reps = opt.reps;
        params.seed = opt.seed;
        params.threads = opt.threads;
        const auto rows = gi::harness::run_compare(params);

        auto data = open_output(dir / "compare_replicates.csv");
        data << "n,G,s,z,p,vartheta,method,rep,seed,z_hat,abs_error,loss\n";
        for (const auto& r : rows)
            data << params.n << ',' << params.num_groups << ',' << params.s << ',' << params.z
                 << ',' << r.p << ',' << csv_double(r.vartheta) << ','
                 << gi::harness::method_name(r.method) << ',' << r.rep << ',' << r.seed << ','
                 << r.z_hat << ',' << csv_double(r.abs_error) << ',' << csv_double(r.loss)
                 << '\n';

        // Aggregate per (p, vartheta, method).
        auto summary = open_output(dir / "compare_summary.csv");
        summary << "p,vartheta,method,reps,mad,mean_loss\n";
        for (int p : params.ps) {
            for (double vartheta : params.varthetas) {
                for (auto method : params.methods) {
                    double sum_err = 0.0, sum_loss = 0.0;
                    int count = 0;
                    bool has_loss = false;
                    for (const auto& r : rows) {
                        if (r.p != p || r.vartheta != vartheta || r.method != method) continue;
                        sum_err += r.abs_error;
                        if (!std::isnan(r.loss)) {
                            sum_loss += r.loss;
                            has_loss = true;
                        }
                        ++count;
                    }
                    if (count == 0) continue;
                    summary << p << ',' << csv_double(vartheta) << ','
                            << gi::harness::method_name(method) << ',' << count << ','
                            << csv_double(sum_err / count) << ','
                            << (has_loss ? csv_double(sum_loss / count) : "") << '\n';
                }
            }
        }
        return 0;
    }

    if (opt.experiment == "multi") {
        gi::harness::MultiParams params;
        maybe_set(grid, "n", params.n);
        maybe_set(grid, "p", params.p);
        maybe_set(grid, "num_groups", params.num_groups);
        maybe_set(grid, "s", params.s);
        maybe_set(grid, "varthetas", params.varthetas);
        maybe_set(grid, "num_intervals", params.num_intervals);
        maybe_set(grid, "n_null", params.n_null);
        maybe_set(grid, "quantile", params.quantile);
        maybe_set(grid, "reps", params.reps);
        if (opt.n > 0) params.n = opt.n;
        if (opt.p > 0) params.p = opt.p;
        if (opt.num_groups > 0) params.num_groups = opt.num_groups;
        if (opt.s > 0) params.s = opt.s;
        if (!opt.varthetas.empty()) params.varthetas = opt.varthetas;
        if (opt.num_intervals > 0) params.num_intervals = opt.num_intervals;
        if (opt.n_null > 0) params.n_null = opt.n_null;
        if (opt.reps >= 0) params.reps = opt.reps;
        params.seed = opt.seed;
        params.threads = opt.threads;
        const auto result = gi::harness::run_multi(params);

        auto data = open_output(dir / "multi_replicates.csv");
        data << "n,p,G,s,vartheta,xi,rep,seed,ari,detected\n";
        for (const auto& r : result.rows)
            data << params.n << ',' << params.p << ',' << params.num_groups << ',' << params.s
                 << ',' << csv_double(r.vartheta) << ',' << csv_double(result.xi) << ','
                 << r.rep << ',' << r.seed << ',' << csv_double(r.ari) << ',' << r.detected
                 << '\n';

        auto summary = open_output(dir / "multi_summary.csv");
        summary << "vartheta,reps,xi,mean_ari,mean_detected\n";
        for (double vartheta : params.varthetas) {
            double sum_ari = 0.0, sum_detected = 0.0;
            int count = 0;
            for (const auto& r : result.rows) {
                if (r.vartheta != vartheta) continue;
                sum_ari += r.ari;
                sum_detected += r.detected;
                ++count;
            }
            if (count == 0) continue;
            summary << csv_double(vartheta) << ',' << count << ',' << csv_double(result.xi)
                    << ',' << csv_double(sum_ari / count) << ','
                    << csv_double(sum_detected / count) << '\n';
        }
        return 0;
    }

    throw gi::ConfigError("unknown experiment '" + opt.experiment +
                          "' (expected pstar|lambda|compare|multi)");
}

// -------------------------------------------------------------- calibrate ---

struct CalibrateOptions {
    int n = 0, p = 0;
    std::string groups_path;
    int group_size = 0;
    LambdaChoice lambda;
    int n_null = 1000;
    double quantile = 1.0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string output = "xi.json";
};

int cmd_calibrate(const CalibrateOptions& opt) {
    if (opt.n < 2 || opt.p < 1) throw gi::ConfigError("calibrate: need --n >= 2 and --p >= 1");
    gi::Grouping grouping =
        !opt.groups_path.empty()
            ? gi::read_grouping_json_file(opt.groups_path, opt.p)
            : gi::Grouping::contiguous_blocks(opt.p, opt.group_size > 0 ? opt.group_size : opt.p);
    const double lambda = opt.lambda.resolve(opt.n, grouping.num_groups(),
                                             grouping.min_group_size());
    const double xi = gi::calibrate_threshold(opt.n, opt.p, grouping, lambda, opt.n_null,
                                              opt.quantile, opt.seed, opt.threads);
    json doc;
    doc["xi"] = xi;
    doc["n_null"] = opt.n_null;
    doc["quantile"] = opt.quantile;
    doc["seed"] = opt.seed;
    if (const auto parent = std::filesystem::path(opt.output).parent_path(); !parent.empty())
        std::filesystem::create_directories(parent);
    open_output(opt.output) << doc.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-sparse change-point detection for high-dimensional panels"};
    app.require_subcommand(1);

    DetectOptions detect;
    auto* cmd_d = app.add_subcommand("detect", "Detect change points in a CSV panel");
    cmd_d->add_option("--data", detect.data_path, "CSV panel, rows = coordinates")->required();
    cmd_d->add_option("--groups", detect.groups_path, "JSON array of 1-based index arrays")
        ->required();
    cmd_d->add_option("--mode", detect.mode, "single | multi")
        ->check(CLI::IsMember({"single", "multi"}));
    cmd_d->add_flag("--no-standardize", detect.no_standardize,
                    "Skip per-row scale estimation");
    add_lambda_flags(cmd_d, detect.lambda);
    cmd_d->add_option("--Q", detect.num_intervals, "Random intervals for multi mode");
    double xi_value = -1.0;
    auto* xi_opt = cmd_d->add_option("--xi", xi_value, "Acceptance threshold for multi mode");
    cmd_d->add_flag("--auto-xi", detect.auto_xi, "Calibrate the threshold on the null model");
    cmd_d->add_option("--n-null", detect.n_null, "Calibration replicates for --auto-xi");
    cmd_d->add_option("--quantile", detect.quantile, "Calibration quantile in (0, 1]");
    cmd_d->add_option("--seed", detect.seed, "Seed for interval sampling and calibration");
    cmd_d->add_option("--threads", detect.threads, "Worker threads (0 = hardware)");
    cmd_d->add_option("--output-dir", detect.output_dir, "Artifact directory");

    SimulateOptions simulate;
    auto* cmd_s = app.add_subcommand("simulate", "Run a simulation experiment grid");
    cmd_s->add_option("--experiment", simulate.experiment, "pstar | lambda | compare | multi");
    cmd_s->add_option("--grid", simulate.grid_path, "JSON file with grid parameters");
    cmd_s->add_option("--reps", simulate.reps, "Replicates per grid cell");
    cmd_s->add_option("--seed", simulate.seed, "Base seed; replicate r uses seed + r");
    cmd_s->add_option("--threads", simulate.threads, "Worker threads (0 = hardware)");
    cmd_s->add_option("--output-dir", simulate.output_dir, "Artifact directory");
    cmd_s->add_option("--n", simulate.n, "Time length");
    cmd_s->add_option("--p", simulate.p, "Dimension");
    cmd_s->add_option("--G", simulate.num_groups, "Number of groups");
    cmd_s->add_option("--s", simulate.s, "Active groups");
    cmd_s->add_option("--k", simulate.k, "Active coordinates (pstar experiment)");
    cmd_s->add_option("--z", simulate.z, "Change location");
    cmd_s->add_option("--vartheta", simulate.varthetas, "Signal sizes");
    cmd_s->add_option("--Q", simulate.num_intervals, "WBS intervals (multi experiment)");
    cmd_s->add_option("--n-null", simulate.n_null, "Calibration replicates (multi experiment)");

    CalibrateOptions calibrate;
    auto* cmd_c = app.add_subcommand("calibrate", "Monte-Carlo threshold for the null model");
    cmd_c->add_option("--n", calibrate.n, "Time length")->required();
    cmd_c->add_option("--p", calibrate.p, "Dimension")->required();
    cmd_c->add_option("--groups", calibrate.groups_path, "Grouping JSON (1-based)");
    cmd_c->add_option("--group-size", calibrate.group_size,
                      "Equal contiguous group size (alternative to --groups)");
    add_lambda_flags(cmd_c, calibrate.lambda);
    cmd_c->add_option("--n-null", calibrate.n_null, "Null replicates");
    cmd_c->add_option("--quantile", calibrate.quantile, "Quantile in (0, 1]");
    cmd_c->add_option("--seed", calibrate.seed, "Base seed; replicate r uses seed + r");
    cmd_c->add_option("--threads", calibrate.threads, "Worker threads (0 = hardware)");
    cmd_c->add_option("--output", calibrate.output, "Output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (cmd_d->parsed()) {
            if (xi_opt->count() > 0) detect.xi = xi_value;
            return cmd_detect(detect);
        }
        if (cmd_s->parsed()) return cmd_simulate(simulate);
        if (cmd_c->parsed()) return cmd_calibrate(calibrate);
    } catch (const gi::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const gi::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const gi::NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
