#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "rsslocate/localizer.hpp"
#include "rsslocate/trajectory.hpp"

namespace rsslocate {

/// One end-to-end trial: place transmitter and receiver at random, run an
/// exploration strategy, collect noisy RSS along the path, localize.
struct TrialConfig {
    GridMap map;
    int duration_s = 150;  ///< movement epochs; duration_s + 1 positions
    PathLossParams channel;
    Strategy strategy = Strategy::CornerTour;
    std::uint64_t seed = 0;

    void validate() const;  ///< throws std::invalid_argument
};

struct TrialResult {
    Vec2 true_bs;  ///< transmitter position, meters
    Trajectory trajectory;
    std::vector<RssMeasurement> measurements;
    PleSearchResult estimate;
    double position_error_m = 0.0;
    /// Set when localization was impossible (degenerate geometry). Failed
    /// trials are recorded, never silently dropped.
    bool failed = false;
    std::string failure_reason;
};

/// Uniform lattice position.
GridPosition random_position(const GridMap& map, Rng& rng);

/// Uniform (transmitter, receiver-start) pair; the receiver is resampled
/// until it differs from the transmitter, so every reachable distance is at
/// least one cell.
std::pair<GridPosition, GridPosition> place_entities(const GridMap& map, Rng& rng);

/// Runs one trial, fully determined by config (including its seed).
/// Epochs where the receiver stands on the transmitter cell (distance below
/// the reference distance) contribute no measurement.
TrialResult run_trial(const TrialConfig& config);

/// Same as run_trial but with a caller-supplied trajectory instead of the
/// strategy-generated one. Placement and noise still derive from the seed.
TrialResult run_trial_with_trajectory(const TrialConfig& config, const Trajectory& trajectory);

}  // namespace rsslocate
