#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rsslocate/montecarlo.hpp"

namespace rsslocate {

/// Stable decimal formatting used by every CSV writer ("." separator,
/// round-trip-safe precision, "inf"/"nan" for non-finite values).
std::string format_number(double value);

/// Paper-style summary table: one row per strategy, one column per swept
/// parameter value.
struct SummaryTable {
    std::string axis_label;          ///< name of the swept parameter
    std::vector<double> axis_values;
    std::vector<std::pair<std::string, std::vector<double>>> rows;  ///< (strategy, stats)
};

/// Which statistic a summary table reports per cell.
enum class TableStat { MeanPle, RmsError };

/// Collects one summary table from a sweep. `axis` selects which of the
/// three parameters varies (0 = true PLE, 1 = sigma, 2 = r0); the other two
/// must be single-valued in the spec that produced the result.
SummaryTable summarize_sweep(const SweepResult& result, const SweepSpec& spec,
                             int axis, TableStat stat);

void write_summary_table_csv(const std::filesystem::path& path, const SummaryTable& table);

/// Figure-style CDF comparison: both strategies' empirical CDFs evaluated on
/// the merged grid of their error samples. Columns: error, cdf_random,
/// cdf_proposed.
void write_figure_csv(const std::filesystem::path& path,
                      const std::vector<double>& random_errors,
                      const std::vector<double>& corner_errors);

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory);
void write_measurements_csv(const std::filesystem::path& path,
                            const std::vector<RssMeasurement>& measurements);
void write_cost_curve_csv(const std::filesystem::path& path,
                          const std::vector<std::pair<double, double>>& cost_curve);
void write_trial_result_csv(const std::filesystem::path& path, const TrialResult& result);

}  // namespace rsslocate
