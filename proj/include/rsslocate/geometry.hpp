#pragma once

#include <cmath>

namespace rsslocate {

/// Point in map coordinates, meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Lattice cell index on the grid map.
struct GridPosition {
    int x = 0;
    int y = 0;

    bool operator==(const GridPosition&) const = default;
};

}  // namespace rsslocate
