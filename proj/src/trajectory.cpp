#include "rsslocate/trajectory.hpp"

#include <stdexcept>

namespace rsslocate {

namespace {

void require_inside(const GridMap& map, GridPosition start) {
    if (!map.contains(start)) {
        throw std::invalid_argument("trajectory: start position outside the map");
    }
}

void require_steps(int steps) {
    if (steps < 1) {
        throw std::invalid_argument("trajectory: steps must be >= 1");
    }
}

/// Boundary cells in counter-clockwise order starting at the origin corner.
std::vector<GridPosition> perimeter_ring(const GridMap& map) {
    const int last = map.width_cells - 1;
    std::vector<GridPosition> ring;
    ring.reserve(static_cast<std::size_t>(4 * last));
    for (int x = 0; x < last; ++x) ring.push_back({x, 0});
    for (int y = 0; y < last; ++y) ring.push_back({last, y});
    for (int x = last; x > 0; --x) ring.push_back({x, last});
    for (int y = last; y > 0; --y) ring.push_back({0, y});
    return ring;
}

}  // namespace

const char* strategy_name(Strategy strategy) {
    return strategy == Strategy::Random ? "random" : "corner";
}

void GridMap::validate() const {
    if (width_cells < 2) {
        throw std::invalid_argument("GridMap: needs at least 2 cells per axis");
    }
    if (!(cell_size > 0.0)) {
        throw std::invalid_argument("GridMap: cell size must be positive");
    }
}

bool GridMap::contains(GridPosition p) const {
    return p.x >= 0 && p.x < width_cells && p.y >= 0 && p.y < width_cells;
}

Vec2 GridMap::to_meters(GridPosition p) const {
    return {p.x * cell_size, p.y * cell_size};
}

std::array<GridPosition, 4> GridMap::corners() const {
    const int last = width_cells - 1;
    return {{{0, 0}, {last, 0}, {last, last}, {0, last}}};
}

Trajectory random_walk(const GridMap& map, GridPosition start, int steps, Rng& rng) {
    map.validate();
    require_inside(map, start);
    require_steps(steps);

    Trajectory trajectory{{start}, Strategy::Random};
    trajectory.positions.reserve(static_cast<std::size_t>(steps) + 1);
    GridPosition current = start;
    constexpr GridPosition offsets[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int i = 0; i < steps; ++i) {
        GridPosition neighbors[4];
        std::size_t count = 0;
        for (const auto& d : offsets) {
            const GridPosition candidate{current.x + d.x, current.y + d.y};
            if (map.contains(candidate)) neighbors[count++] = candidate;
        }
        current = neighbors[rng.bounded(count)];
        trajectory.positions.push_back(current);
    }
    return trajectory;
}

GridPosition nearest_corner(const GridMap& map, GridPosition pos) {
    map.validate();
    require_inside(map, pos);
    GridPosition best{};
    long best_sq = -1;
    for (const auto& corner : map.corners()) {
        const long dx = pos.x - corner.x;
        const long dy = pos.y - corner.y;
        const long sq = dx * dx + dy * dy;
        if (best_sq < 0 || sq < best_sq) {
            best_sq = sq;
            best = corner;
        }
    }
    return best;
}

Trajectory corner_tour(const GridMap& map, GridPosition start, int steps) {
    map.validate();
    require_inside(map, start);
    require_steps(steps);

    const std::size_t total = static_cast<std::size_t>(steps) + 1;
    Trajectory trajectory{{start}, Strategy::CornerTour};
    trajectory.positions.reserve(total);

    // Leg 1: staircase to the nearest corner, x moves before y moves.
    const GridPosition corner = nearest_corner(map, start);
    GridPosition current = start;
    while (!(current == corner) && trajectory.positions.size() < total) {
        if (current.x != corner.x) {
            current.x += corner.x > current.x ? 1 : -1;
        } else {
            current.y += corner.y > current.y ? 1 : -1;
        }
        trajectory.positions.push_back(current);
    }

    // Leg 2: counter-clockwise perimeter laps. From a corner both rotational
    // directions reach the next corner in the same number of steps, and ties
    // resolve counter-clockwise.
    if (trajectory.positions.size() < total) {
        const auto ring = perimeter_ring(map);
        std::size_t index = 0;
        while (!(ring[index] == corner)) ++index;
        while (trajectory.positions.size() < total) {
            index = (index + 1) % ring.size();
            trajectory.positions.push_back(ring[index]);
        }
    }
    return trajectory;
}

}  // namespace rsslocate
