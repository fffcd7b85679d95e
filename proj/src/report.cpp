#include "rsslocate/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rsslocate {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    // Binary mode keeps line endings at LF everywhere.
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

void finish_csv(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

SummaryTable summarize_sweep(const SweepResult& result, const SweepSpec& spec,
                             int axis, TableStat stat) {
    SummaryTable table;
    switch (axis) {
        case 0:
            table.axis_label = "true_ple";
            table.axis_values = spec.ple_values;
            break;
        case 1:
            table.axis_label = "sigma_db";
            table.axis_values = spec.sigma_values;
            break;
        case 2:
            table.axis_label = "r0_dbm";
            table.axis_values = spec.r0_values;
            break;
        default:
            throw std::invalid_argument("summarize_sweep: axis must be 0, 1 or 2");
    }

    for (const Strategy strategy : spec.strategies) {
        std::vector<double> values;
        values.reserve(table.axis_values.size());
        for (const double v : table.axis_values) {
            const double n = axis == 0 ? v : spec.ple_values.front();
            const double sigma = axis == 1 ? v : spec.sigma_values.front();
            const double r0 = axis == 2 ? v : spec.r0_values.front();
            const CellStats* cell = result.find(n, sigma, r0, strategy);
            if (cell == nullptr) {
                throw std::invalid_argument("summarize_sweep: cell missing from result");
            }
            values.push_back(stat == TableStat::MeanPle ? cell->mean_n_opt : cell->rms_error_m);
        }
        table.rows.emplace_back(strategy_name(strategy), std::move(values));
    }
    return table;
}

void write_summary_table_csv(const std::filesystem::path& path, const SummaryTable& table) {
    auto out = open_csv(path);
    out << table.axis_label;
    for (const double v : table.axis_values) out << ',' << format_number(v);
    out << '\n';
    for (const auto& [name, values] : table.rows) {
        out << name;
        for (const double v : values) out << ',' << format_number(v);
        out << '\n';
    }
    finish_csv(out, path);
}

void write_figure_csv(const std::filesystem::path& path,
                      const std::vector<double>& random_errors,
                      const std::vector<double>& corner_errors) {
    std::vector<double> random_sorted = random_errors;
    std::vector<double> corner_sorted = corner_errors;
    std::sort(random_sorted.begin(), random_sorted.end());
    std::sort(corner_sorted.begin(), corner_sorted.end());

    std::vector<double> grid;
    grid.reserve(random_sorted.size() + corner_sorted.size());
    grid.insert(grid.end(), random_sorted.begin(), random_sorted.end());
    grid.insert(grid.end(), corner_sorted.begin(), corner_sorted.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    auto out = open_csv(path);
    out << "error,cdf_random,cdf_proposed\n";
    for (const double e : grid) {
        out << format_number(e) << ',' << format_number(cdf_at(random_sorted, e)) << ','
            << format_number(cdf_at(corner_sorted, e)) << '\n';
    }
    finish_csv(out, path);
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory) {
    auto out = open_csv(path);
    out << "epoch,x,y\n";
    for (std::size_t epoch = 0; epoch < trajectory.positions.size(); ++epoch) {
        const auto& p = trajectory.positions[epoch];
        out << epoch << ',' << p.x << ',' << p.y << '\n';
    }
    finish_csv(out, path);
}

void write_measurements_csv(const std::filesystem::path& path,
                            const std::vector<RssMeasurement>& measurements) {
    auto out = open_csv(path);
    out << "index,p,q,rss_dbm,linear_power\n";
    for (std::size_t i = 0; i < measurements.size(); ++i) {
        const auto& m = measurements[i];
        out << i << ',' << format_number(m.position.x) << ',' << format_number(m.position.y)
            << ',' << format_number(m.rss) << ',' << format_number(m.linear_power) << '\n';
    }
    finish_csv(out, path);
}

void write_cost_curve_csv(const std::filesystem::path& path,
                          const std::vector<std::pair<double, double>>& cost_curve) {
    auto out = open_csv(path);
    out << "n_candidate,cost\n";
    for (const auto& [n_j, cost] : cost_curve) {
        out << format_number(n_j) << ',' << format_number(cost) << '\n';
    }
    finish_csv(out, path);
}

void write_trial_result_csv(const std::filesystem::path& path, const TrialResult& result) {
    auto out = open_csv(path);
    out << "true_x,true_y,est_x,est_y,est_s,n_opt,position_error_m,measurements,failed,"
           "failure_reason\n";
    out << format_number(result.true_bs.x) << ',' << format_number(result.true_bs.y) << ','
        << format_number(result.estimate.estimate.x) << ','
        << format_number(result.estimate.estimate.y) << ','
        << format_number(result.estimate.estimate.s) << ','
        << format_number(result.estimate.n_opt) << ','
        << format_number(result.position_error_m) << ',' << result.measurements.size() << ','
        << (result.failed ? 1 : 0) << ',' << result.failure_reason << '\n';
    finish_csv(out, path);
}

}  // namespace rsslocate
