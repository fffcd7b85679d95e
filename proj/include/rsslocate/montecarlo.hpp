#pragma once

#include <cstdint>
#include <vector>

#include "rsslocate/simulation.hpp"

namespace rsslocate {

/// Parameter grid for a batch of trials: the cross product of the three
/// value lists, each cell run trials_per_cell times per strategy. The two
/// strategies of a cell share trial seeds, so placements are paired.
struct SweepSpec {
    std::vector<double> ple_values{3.0};
    std::vector<double> sigma_values{3.0};
    std::vector<double> r0_values{-27.0};
    int trials_per_cell = 100;
    std::vector<Strategy> strategies{Strategy::Random, Strategy::CornerTour};
    std::uint64_t base_seed = 0;
    GridMap map;
    int duration_s = 150;

    void validate() const;  ///< throws std::invalid_argument
};

/// Aggregated statistics of one (parameter cell, strategy) pair.
struct CellStats {
    double true_n = 0.0;
    double sigma = 0.0;
    double r0 = 0.0;
    Strategy strategy = Strategy::Random;
    double mean_n_opt = 0.0;   ///< NaN when every trial failed
    double rms_error_m = 0.0;  ///< over successful trials; NaN when every trial failed
    std::vector<double> errors;  ///< successful trials, in trial order
    std::vector<double> n_opts;  ///< successful trials, in trial order
    int failed_trials = 0;
    int total_trials = 0;
    bool flagged = false;  ///< failures exceeded 5% of the cell
};

struct SweepResult {
    std::vector<CellStats> cells;  ///< canonical order: ple x sigma x r0 x strategy

    /// Cell lookup by exact parameter values; nullptr when absent.
    const CellStats* find(double true_n, double sigma, double r0, Strategy strategy) const;
};

/// Empirical distribution function emitted at the sorted sample points;
/// cumulative fractions run from 1/N to 1.
struct CdfSeries {
    std::vector<std::pair<double, double>> points;  ///< (error_m, cumulative fraction)
};

/// Trial configuration the sweep uses for one (cell, strategy, trial) slot.
/// The seed depends on the cell parameters and trial index but not on the
/// strategy, which is what pairs the strategies' placements.
TrialConfig sweep_trial_config(const SweepSpec& spec, double true_n, double sigma,
                               double r0, Strategy strategy, int trial_index);

/// Runs every cell of the spec. jobs <= 0 uses all hardware threads; the
/// result is identical for any jobs value. Per-trial failures are counted in
/// their cell, never dropped.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 0);

/// sqrt(mean of squared errors). Throws std::invalid_argument on empty input.
double rms_error(const std::vector<double>& errors);

/// Arithmetic mean. Throws std::invalid_argument on empty input.
double mean_ple(const std::vector<double>& n_opts);

/// Standard empirical CDF of the sample. Throws std::invalid_argument on
/// empty input.
CdfSeries empirical_cdf(std::vector<double> errors);

/// Fraction of sorted_errors <= value (sorted_errors must be ascending).
double cdf_at(const std::vector<double>& sorted_errors, double value);

}  // namespace rsslocate
