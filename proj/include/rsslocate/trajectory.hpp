#pragma once

#include <array>
#include <vector>

#include "rsslocate/geometry.hpp"
#include "rsslocate/rng.hpp"

namespace rsslocate {

/// Receiver exploration strategy.
enum class Strategy { Random, CornerTour };

const char* strategy_name(Strategy strategy);

/// Square lattice of width_cells x width_cells positions spaced cell_size
/// meters apart. Valid positions are integer pairs in [0, width_cells).
struct GridMap {
    int width_cells = 45;
    double cell_size = 1.0;

    void validate() const;  ///< throws std::invalid_argument
    bool contains(GridPosition p) const;
    Vec2 to_meters(GridPosition p) const;

    /// The four corners in counter-clockwise order starting at the origin.
    std::array<GridPosition, 4> corners() const;
};

/// Ordered receiver positions, one per 1-second epoch.
struct Trajectory {
    std::vector<GridPosition> positions;
    Strategy strategy = Strategy::Random;
};

/// Random walk of `steps` moves from `start`: each epoch the receiver moves
/// to a uniformly chosen in-bounds 4-neighbor (it never stays put). Returns
/// steps+1 positions. Throws std::invalid_argument if start is outside the
/// map or steps < 1.
Trajectory random_walk(const GridMap& map, GridPosition start, int steps, Rng& rng);

/// Corner minimizing the Euclidean distance to pos; ties resolve in the
/// corner order returned by GridMap::corners().
GridPosition nearest_corner(const GridMap& map, GridPosition pos);

/// Deterministic tour: a staircase path to the nearest corner (x moves
/// first, then y), then counter-clockwise laps of the map perimeter until
/// `steps` epochs are consumed. Returns steps+1 positions.
Trajectory corner_tour(const GridMap& map, GridPosition start, int steps);

}  // namespace rsslocate
