// Command-line front end: single-trial debugging runs and the full
// table/figure Monte Carlo sweeps, all reproducible from --seed.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsslocate/montecarlo.hpp"
#include "rsslocate/report.hpp"

namespace fs = std::filesystem;
using namespace rsslocate;

namespace {

struct CommonOptions {
    int map_size = 45;
    int duration_s = 150;
    double true_n = 3.0;
    double sigma = 3.0;
    double r0 = -27.0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    int jobs = 0;
    bool verbose = false;
    std::string config_path;
};

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
    // TakeLast lets config-file values (injected before the explicit flags)
    // be overridden by them; see expand_config_args below.
    const auto last = CLI::MultiOptionPolicy::TakeLast;
    cmd.add_option("--map-size", opts.map_size, "Lattice points per axis")
        ->check(CLI::Range(2, 100000))
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--duration-s", opts.duration_s, "Trial length in 1 s epochs")
        ->check(CLI::Range(3, 100000000))
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--true-n", opts.true_n, "True path-loss exponent")
        ->check(CLI::PositiveNumber)
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--sigma", opts.sigma, "Shadow-noise standard deviation, dB")
        ->check(CLI::NonNegativeNumber)
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--r0", opts.r0, "RSS at the 1 m reference distance, dBm")
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--seed", opts.seed, "Master RNG seed; the only randomness source")
        ->envname("RSS_LOCATE_SEED")
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--out", opts.out_dir, "Output directory for CSV files")
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_option("--jobs", opts.jobs, "Worker threads; 0 = all cores. Never changes results")
        ->check(CLI::Range(0, 4096))
        ->multi_option_policy(last)
        ->capture_default_str();
    cmd.add_flag("-v,--verbose", opts.verbose, "Echo the resolved configuration");
    cmd.add_option("--config", opts.config_path,
                   "Flat key=value file mirroring flag names; explicit flags win")
        ->multi_option_policy(last);
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

/// Reads a flat key=value config file into "--key=value" arguments.
std::vector<std::string> load_config_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::vector<std::string> args;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line is not key=value: " + line);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config line has an empty key: " + line);
        if (key == "config") throw std::runtime_error("config files cannot include each other");
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

/// Expands any --config file into its flag equivalents, inserted directly
/// after the subcommand name so explicit command-line flags take precedence
/// (every option takes its last occurrence).
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        }
    }
    if (config_path.empty()) return args;

    const std::vector<std::string> config_args = load_config_args(config_path);
    auto insert_at = args.begin();
    for (auto it = args.begin(); it != args.end(); ++it) {
        if (!it->empty() && it->front() != '-') {
            insert_at = it + 1;
            break;
        }
    }
    args.insert(insert_at, config_args.begin(), config_args.end());
    return args;
}

GridMap make_map(const CommonOptions& opts) { return {opts.map_size, 1.0}; }

void echo_config(const CommonOptions& opts) {
    std::cout << "config: map=" << opts.map_size << "x" << opts.map_size
              << " duration_s=" << opts.duration_s << " true_n=" << opts.true_n
              << " sigma=" << opts.sigma << " r0=" << opts.r0 << " seed=" << opts.seed
              << " jobs=" << opts.jobs << " out=" << opts.out_dir << "\n";
}

int run_trial_command(const CommonOptions& opts, Strategy strategy) {
    if (opts.verbose) echo_config(opts);

    TrialConfig config;
    config.map = make_map(opts);
    config.duration_s = opts.duration_s;
    config.channel = PathLossParams{opts.r0, opts.true_n, opts.sigma};
    config.strategy = strategy;
    config.seed = opts.seed;

    const TrialResult result = run_trial(config);

    const fs::path out(opts.out_dir);
    write_trajectory_csv(out / "trajectory.csv", result.trajectory);
    write_measurements_csv(out / "measurements.csv", result.measurements);
    write_cost_curve_csv(out / "cost_curve.csv", result.estimate.cost_curve);
    write_trial_result_csv(out / "result.csv", result);

    if (result.failed) {
        std::cout << "trial failed: " << result.failure_reason << "\n";
        return 1;
    }
    std::cout << "n_opt=" << format_number(result.estimate.n_opt)
              << " error_m=" << format_number(result.position_error_m) << "\n";
    return 0;
}

enum class SweepKind { Ple = 1, Sigma = 2, R0 = 3 };

SweepSpec make_sweep_spec(const CommonOptions& opts, SweepKind kind, int trials) {
    SweepSpec spec;
    spec.map = make_map(opts);
    spec.duration_s = opts.duration_s;
    spec.trials_per_cell = trials;
    // Each sweep draws from its own seed stream so a single table reproduces
    // byte-identically whether run alone or via --all.
    spec.base_seed = Rng::mix(opts.seed, static_cast<std::uint64_t>(kind));
    switch (kind) {
        case SweepKind::Ple:
            spec.ple_values = {2.0, 2.5, 3.0, 3.5, 4.0};
            spec.sigma_values = {opts.sigma};
            spec.r0_values = {opts.r0};
            break;
        case SweepKind::Sigma:
            spec.ple_values = {opts.true_n};
            spec.sigma_values = {1.0, 2.0, 3.0, 4.0};
            spec.r0_values = {opts.r0};
            break;
        case SweepKind::R0:
            spec.ple_values = {opts.true_n};
            spec.sigma_values = {opts.sigma};
            spec.r0_values = {-20.0, -25.0, -30.0, -35.0, -40.0};
            break;
    }
    return spec;
}

void log_cells(const char* sweep_name, const SweepResult& result) {
    for (const auto& cell : result.cells) {
        std::cout << "[sweep " << sweep_name << "] n=" << format_number(cell.true_n)
                  << " sigma=" << format_number(cell.sigma)
                  << " r0=" << format_number(cell.r0)
                  << " strategy=" << strategy_name(cell.strategy)
                  << " mean_n_opt=" << format_number(cell.mean_n_opt)
                  << " rms_m=" << format_number(cell.rms_error_m)
                  << " failed=" << cell.failed_trials << "/" << cell.total_trials << "\n";
        if (cell.flagged) {
            std::cerr << "warning: cell n=" << format_number(cell.true_n)
                      << " sigma=" << format_number(cell.sigma)
                      << " r0=" << format_number(cell.r0) << " strategy="
                      << strategy_name(cell.strategy)
                      << " had more than 5% failed trials\n";
        }
    }
}

/// The cell a figure's CDF comparison is drawn from: the sweep's
/// representative swept value (the defaults n=3 and sigma=3; the median -30
/// for the r0 axis, whose sweep does not include the default).
void write_figure(const fs::path& path, const SweepResult& result, const SweepSpec& spec,
                  SweepKind kind) {
    double n = spec.ple_values.front();
    double sigma = spec.sigma_values.front();
    double r0 = spec.r0_values.front();
    switch (kind) {
        case SweepKind::Ple: n = 3.0; break;
        case SweepKind::Sigma: sigma = 3.0; break;
        case SweepKind::R0: r0 = -30.0; break;
    }
    const CellStats* random_cell = result.find(n, sigma, r0, Strategy::Random);
    const CellStats* corner_cell = result.find(n, sigma, r0, Strategy::CornerTour);
    if (random_cell == nullptr || corner_cell == nullptr) {
        throw std::runtime_error("figure cell missing from sweep result");
    }
    write_figure_csv(path, random_cell->errors, corner_cell->errors);
}

int run_sweep_command(const CommonOptions& opts, int trials, const std::set<int>& tables,
                      const std::set<int>& figures) {
    if (opts.verbose) echo_config(opts);

    // table number -> (sweep, axis, statistic); odd tables report the mean
    // estimated exponent, even tables the RMS localization error.
    static const std::map<int, std::tuple<SweepKind, int, TableStat>> kTableLayout = {
        {1, {SweepKind::Ple, 0, TableStat::MeanPle}},
        {2, {SweepKind::Ple, 0, TableStat::RmsError}},
        {3, {SweepKind::Sigma, 1, TableStat::MeanPle}},
        {4, {SweepKind::Sigma, 1, TableStat::RmsError}},
        {5, {SweepKind::R0, 2, TableStat::MeanPle}},
        {6, {SweepKind::R0, 2, TableStat::RmsError}},
    };
    static const char* kRoman[] = {"", "I", "II", "III", "IV", "V", "VI"};
    static const std::map<SweepKind, const char*> kSweepNames = {
        {SweepKind::Ple, "ple"}, {SweepKind::Sigma, "sigma"}, {SweepKind::R0, "r0"}};

    std::set<SweepKind> needed;
    for (const int t : tables) needed.insert(std::get<0>(kTableLayout.at(t)));
    for (const int f : figures) needed.insert(static_cast<SweepKind>(f));

    const fs::path out(opts.out_dir);
    std::map<SweepKind, std::pair<SweepSpec, SweepResult>> runs;
    for (const SweepKind kind : needed) {
        SweepSpec spec = make_sweep_spec(opts, kind, trials);
        SweepResult result = run_sweep(spec, opts.jobs);
        log_cells(kSweepNames.at(kind), result);
        runs.emplace(kind, std::make_pair(std::move(spec), std::move(result)));
    }

    for (const int t : tables) {
        const auto& [kind, axis, stat] = kTableLayout.at(t);
        const auto& [spec, result] = runs.at(kind);
        const fs::path path = out / ("table_" + std::string(kRoman[t]) + ".csv");
        write_summary_table_csv(path, summarize_sweep(result, spec, axis, stat));
        std::cout << "wrote " << path.string() << "\n";
    }
    for (const int f : figures) {
        const auto kind = static_cast<SweepKind>(f);
        const auto& [spec, result] = runs.at(kind);
        const fs::path path = out / ("figure_" + std::to_string(f) + ".csv");
        write_figure(path, result, spec, kind);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RSS-based base-station localization with an unknown path-loss exponent"};
    app.require_subcommand(1);

    CommonOptions trial_opts;
    std::string strategy_arg = "corner";
    CLI::App* trial_cmd =
        app.add_subcommand("trial", "Run one trial and dump its CSV bundle");
    add_common_options(*trial_cmd, trial_opts);
    trial_cmd->add_option("--strategy", strategy_arg, "Receiver movement strategy")
        ->check(CLI::IsMember({"random", "corner"}))
        ->capture_default_str();

    CommonOptions sweep_opts;
    int trials = 100;
    int table_arg = 0;
    int figure_arg = 0;
    bool all_outputs = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Run Monte Carlo sweeps and write table/figure CSVs");
    add_common_options(*sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--trials", trials, "Trials per parameter cell")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    CLI::Option* table_opt =
        sweep_cmd->add_option("--table", table_arg, "Emit one summary table (1..6)")
            ->check(CLI::Range(1, 6));
    CLI::Option* figure_opt =
        sweep_cmd->add_option("--figure", figure_arg, "Emit one CDF figure (1..3)")
            ->check(CLI::Range(1, 3));
    CLI::Option* all_opt =
        sweep_cmd->add_flag("--all", all_outputs, "Emit every table and figure");

    try {
        std::vector<std::string> args = expand_config_args(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (trial_cmd->parsed()) {
            const Strategy strategy =
                strategy_arg == "random" ? Strategy::Random : Strategy::CornerTour;
            return run_trial_command(trial_opts, strategy);
        }

        std::set<int> tables;
        std::set<int> figures;
        if (all_outputs) {
            tables = {1, 2, 3, 4, 5, 6};
            figures = {1, 2, 3};
        }
        if (table_opt->count() > 0) tables.insert(table_arg);
        if (figure_opt->count() > 0) figures.insert(figure_arg);
        if (tables.empty() && figures.empty()) {
            std::cerr << "sweep: select an output with --table, --figure or --all\n";
            return 2;
        }
        (void)all_opt;
        return run_sweep_command(sweep_opts, trials, tables, figures);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
