#include "rsslocate/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rsslocate {

namespace {

std::uint64_t seed_word(double value) { return std::bit_cast<std::uint64_t>(value); }

/// Trial seed shared by every strategy of a (cell, trial) slot.
std::uint64_t trial_seed(std::uint64_t base_seed, double true_n, double sigma,
                         double r0, int trial_index) {
    std::uint64_t s = Rng::mix(base_seed, seed_word(true_n));
    s = Rng::mix(s, seed_word(sigma));
    s = Rng::mix(s, seed_word(r0));
    return Rng::mix(s, static_cast<std::uint64_t>(trial_index));
}

/// Runs fn(0..count-1) on up to `jobs` worker threads. Which thread runs
/// which index is unspecified; callers must write results into per-index
/// slots so the outcome is schedule-independent.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void SweepSpec::validate() const {
    if (ple_values.empty() || sigma_values.empty() || r0_values.empty()) {
        throw std::invalid_argument("SweepSpec: parameter value lists must be non-empty");
    }
    if (strategies.empty()) {
        throw std::invalid_argument("SweepSpec: needs at least one strategy");
    }
    if (trials_per_cell < 1) {
        throw std::invalid_argument("SweepSpec: trials_per_cell must be >= 1");
    }
    map.validate();
    for (const double n : ple_values) {
        PathLossParams{r0_values.front(), n, sigma_values.front()}.validate();
    }
    for (const double sigma : sigma_values) {
        if (!(sigma >= 0.0)) throw std::invalid_argument("SweepSpec: sigma must be >= 0");
    }
}

const CellStats* SweepResult::find(double true_n, double sigma, double r0,
                                   Strategy strategy) const {
    for (const auto& cell : cells) {
        if (cell.true_n == true_n && cell.sigma == sigma && cell.r0 == r0 &&
            cell.strategy == strategy) {
            return &cell;
        }
    }
    return nullptr;
}

TrialConfig sweep_trial_config(const SweepSpec& spec, double true_n, double sigma,
                               double r0, Strategy strategy, int trial_index) {
    TrialConfig config;
    config.map = spec.map;
    config.duration_s = spec.duration_s;
    config.channel = PathLossParams{r0, true_n, sigma};
    config.strategy = strategy;
    config.seed = trial_seed(spec.base_seed, true_n, sigma, r0, trial_index);
    return config;
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    spec.validate();

    SweepResult result;
    for (const double n : spec.ple_values) {
        for (const double sigma : spec.sigma_values) {
            for (const double r0 : spec.r0_values) {
                for (const Strategy strategy : spec.strategies) {
                    CellStats cell;
                    cell.true_n = n;
                    cell.sigma = sigma;
                    cell.r0 = r0;
                    cell.strategy = strategy;
                    cell.total_trials = spec.trials_per_cell;
                    result.cells.push_back(std::move(cell));
                }
            }
        }
    }

    struct Slot {
        double n_opt = 0.0;
        double error = 0.0;
        bool failed = false;
    };
    const auto trials = static_cast<std::size_t>(spec.trials_per_cell);
    std::vector<Slot> slots(result.cells.size() * trials);

    parallel_for(slots.size(), jobs, [&](std::size_t task) {
        const std::size_t cell_index = task / trials;
        const int trial_index = static_cast<int>(task % trials);
        const CellStats& cell = result.cells[cell_index];
        const TrialConfig config = sweep_trial_config(spec, cell.true_n, cell.sigma,
                                                      cell.r0, cell.strategy, trial_index);
        const TrialResult trial = run_trial(config);
        slots[task] = {trial.estimate.n_opt, trial.position_error_m, trial.failed};
    });

    // Aggregation runs sequentially in canonical order, so the result is
    // independent of the worker schedule.
    for (std::size_t c = 0; c < result.cells.size(); ++c) {
        CellStats& cell = result.cells[c];
        for (std::size_t t = 0; t < trials; ++t) {
            const Slot& slot = slots[c * trials + t];
            if (slot.failed) {
                ++cell.failed_trials;
                continue;
            }
            cell.n_opts.push_back(slot.n_opt);
            cell.errors.push_back(slot.error);
        }
        if (cell.errors.empty()) {
            cell.mean_n_opt = std::numeric_limits<double>::quiet_NaN();
            cell.rms_error_m = std::numeric_limits<double>::quiet_NaN();
        } else {
            cell.mean_n_opt = mean_ple(cell.n_opts);
            cell.rms_error_m = rms_error(cell.errors);
        }
        cell.flagged = cell.failed_trials > 0.05 * cell.total_trials;
    }
    return result;
}

double rms_error(const std::vector<double>& errors) {
    if (errors.empty()) {
        throw std::invalid_argument("rms_error: empty input");
    }
    double sum_sq = 0.0;
    for (const double e : errors) sum_sq += e * e;
    return std::sqrt(sum_sq / static_cast<double>(errors.size()));
}

double mean_ple(const std::vector<double>& n_opts) {
    if (n_opts.empty()) {
        throw std::invalid_argument("mean_ple: empty input");
    }
    double sum = 0.0;
    for (const double n : n_opts) sum += n;
    return sum / static_cast<double>(n_opts.size());
}

CdfSeries empirical_cdf(std::vector<double> errors) {
    if (errors.empty()) {
        throw std::invalid_argument("empirical_cdf: empty input");
    }
    std::sort(errors.begin(), errors.end());
    CdfSeries series;
    series.points.reserve(errors.size());
    const auto count = static_cast<double>(errors.size());
    for (std::size_t i = 0; i < errors.size(); ++i) {
        series.points.emplace_back(errors[i], static_cast<double>(i + 1) / count);
    }
    return series;
}

double cdf_at(const std::vector<double>& sorted_errors, double value) {
    const auto it = std::upper_bound(sorted_errors.begin(), sorted_errors.end(), value);
    return static_cast<double>(it - sorted_errors.begin()) /
           static_cast<double>(sorted_errors.size());
}

}  // namespace rsslocate
