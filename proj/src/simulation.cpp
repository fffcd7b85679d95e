#include "rsslocate/simulation.hpp"

#include <limits>
#include <stdexcept>

#include "rsslocate/errors.hpp"

namespace rsslocate {

namespace {

// Substream salts; placement is drawn from a stream independent of the
// strategy so trials sharing a seed share placements.
constexpr std::uint64_t kPlacementStream = 1;
constexpr std::uint64_t kTrajectoryStream = 2;
constexpr std::uint64_t kNoiseStream = 3;

TrialResult measure_and_localize(const TrialConfig& config, GridPosition bs,
                                 Trajectory trajectory) {
    TrialResult result;
    result.true_bs = config.map.to_meters(bs);
    result.trajectory = std::move(trajectory);

    Rng noise_rng = Rng(config.seed).derive(kNoiseStream);
    result.measurements.reserve(result.trajectory.positions.size());
    for (const auto& cell : result.trajectory.positions) {
        const Vec2 receiver = config.map.to_meters(cell);
        const double d = distance(receiver, result.true_bs);
        if (d < config.channel.d0) continue;  // model undefined; epoch skipped
        result.measurements.push_back(
            make_measurement(receiver, sample_rss(config.channel, d, noise_rng)));
    }

    const double p0 = linear_power(config.channel.r0);
    try {
        result.estimate = ple_grid_search(result.measurements, p0);
        result.position_error_m =
            std::hypot(result.estimate.estimate.x - result.true_bs.x,
                       result.estimate.estimate.y - result.true_bs.y);
    } catch (const DegenerateGeometryError& e) {
        result.failed = true;
        result.failure_reason = e.what();
    } catch (const InsufficientDataError& e) {
        result.failed = true;
        result.failure_reason = e.what();
    }
    if (result.failed) {
        result.estimate = PleSearchResult{};
        result.estimate.n_opt = std::numeric_limits<double>::quiet_NaN();
        result.position_error_m = std::numeric_limits<double>::quiet_NaN();
    }
    return result;
}

}  // namespace

void TrialConfig::validate() const {
    map.validate();
    channel.validate();
    if (duration_s < 3) {
        throw std::invalid_argument("TrialConfig: duration must be >= 3 epochs");
    }
}

GridPosition random_position(const GridMap& map, Rng& rng) {
    const auto width = static_cast<std::uint64_t>(map.width_cells);
    const int x = static_cast<int>(rng.bounded(width));
    const int y = static_cast<int>(rng.bounded(width));
    return {x, y};
}

std::pair<GridPosition, GridPosition> place_entities(const GridMap& map, Rng& rng) {
    map.validate();
    const GridPosition bs = random_position(map, rng);
    GridPosition receiver = random_position(map, rng);
    while (receiver == bs) {
        receiver = random_position(map, rng);
    }
    return {bs, receiver};
}

TrialResult run_trial(const TrialConfig& config) {
    config.validate();
    Rng placement_rng = Rng(config.seed).derive(kPlacementStream);
    const auto [bs, start] = place_entities(config.map, placement_rng);

    Trajectory trajectory;
    if (config.strategy == Strategy::Random) {
        Rng walk_rng = Rng(config.seed).derive(kTrajectoryStream);
        trajectory = random_walk(config.map, start, config.duration_s, walk_rng);
    } else {
        trajectory = corner_tour(config.map, start, config.duration_s);
    }
    return measure_and_localize(config, bs, std::move(trajectory));
}

TrialResult run_trial_with_trajectory(const TrialConfig& config, const Trajectory& trajectory) {
    config.validate();
    if (trajectory.positions.empty()) {
        throw std::invalid_argument("run_trial_with_trajectory: empty trajectory");
    }
    for (const auto& p : trajectory.positions) {
        if (!config.map.contains(p)) {
            throw std::invalid_argument("run_trial_with_trajectory: trajectory exits the map");
        }
    }
    Rng placement_rng = Rng(config.seed).derive(kPlacementStream);
    const auto [bs, start] = place_entities(config.map, placement_rng);
    (void)start;  // the supplied trajectory replaces the strategy's path
    return measure_and_localize(config, bs, trajectory);
}

}  // namespace rsslocate
