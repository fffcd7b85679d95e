#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "rsslocate/trajectory.hpp"

using namespace rsslocate;

namespace {

const GridMap kMap{45, 1.0};

bool four_connected_step(GridPosition a, GridPosition b) {
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    return dx + dy == 1;
}

void check_trajectory_invariants(const Trajectory& t, const GridMap& map) {
    REQUIRE(!t.positions.empty());
    for (std::size_t i = 0; i < t.positions.size(); ++i) {
        CHECK(map.contains(t.positions[i]));
        if (i > 0) {
            CHECK(four_connected_step(t.positions[i - 1], t.positions[i]));
        }
    }
}

// Standard deviation of positions about their centroid, the geometric
// diversity proxy.
double spread(const Trajectory& t) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : t.positions) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(t.positions.size());
    cy /= static_cast<double>(t.positions.size());
    double sum_sq = 0.0;
    for (const auto& p : t.positions) {
        sum_sq += (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy);
    }
    return std::sqrt(sum_sq / static_cast<double>(t.positions.size()));
}

}  // namespace

TEST_CASE("GridMap geometry") {
    CHECK(kMap.contains({0, 0}));
    CHECK(kMap.contains({44, 44}));
    CHECK(!kMap.contains({45, 0}));
    CHECK(!kMap.contains({0, -1}));
    const auto corners = kMap.corners();
    CHECK(corners[0] == GridPosition{0, 0});
    CHECK(corners[1] == GridPosition{44, 0});
    CHECK(corners[2] == GridPosition{44, 44});
    CHECK(corners[3] == GridPosition{0, 44});
    const Vec2 m = kMap.to_meters({3, 7});
    CHECK(m.x == 3.0);
    CHECK(m.y == 7.0);
    CHECK_THROWS_AS((GridMap{1, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridMap{45, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("random_walk honors length, bounds and 4-connectivity") {
    Rng rng(5);
    const Trajectory t = random_walk(kMap, {10, 10}, 150, rng);
    CHECK(t.positions.size() == 151);
    CHECK(t.strategy == Strategy::Random);
    CHECK(t.positions.front() == GridPosition{10, 10});
    check_trajectory_invariants(t, kMap);
}

TEST_CASE("random_walk from a corner only has two exits") {
    std::set<std::pair<int, int>> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        Rng rng(seed);
        const Trajectory t = random_walk(kMap, {0, 0}, 1, rng);
        const GridPosition next = t.positions[1];
        const bool valid = next == GridPosition{1, 0} || next == GridPosition{0, 1};
        CHECK(valid);
        seen.insert({next.x, next.y});
    }
    CHECK(seen.size() == 2);  // both exits occur across seeds
}

TEST_CASE("random_walk always moves") {
    Rng rng(11);
    const Trajectory t = random_walk(kMap, {22, 22}, 400, rng);
    for (std::size_t i = 1; i < t.positions.size(); ++i) {
        CHECK(!(t.positions[i] == t.positions[i - 1]));
    }
}

TEST_CASE("random_walk is deterministic for a fixed seed") {
    Rng a(99);
    Rng b(99);
    CHECK(random_walk(kMap, {5, 40}, 150, a).positions ==
          random_walk(kMap, {5, 40}, 150, b).positions);
}

TEST_CASE("random_walk rejects bad inputs") {
    Rng rng(1);
    CHECK_THROWS_AS(random_walk(kMap, {45, 0}, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_walk(kMap, {-1, 3}, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_walk(kMap, {5, 5}, 0, rng), std::invalid_argument);
}

TEST_CASE("nearest_corner picks by distance with declared tie-break") {
    CHECK(nearest_corner(kMap, {10, 10}) == GridPosition{0, 0});
    CHECK(nearest_corner(kMap, {40, 3}) == GridPosition{44, 0});
    CHECK(nearest_corner(kMap, {3, 40}) == GridPosition{0, 44});
    CHECK(nearest_corner(kMap, {40, 40}) == GridPosition{44, 44});
    // The exact center is equidistant to all four corners; the first corner
    // in map order wins.
    CHECK(nearest_corner(kMap, {22, 22}) == GridPosition{0, 0});
}

TEST_CASE("corner_tour from a corner runs the perimeter counter-clockwise") {
    const Trajectory t = corner_tour(kMap, {0, 0}, 150);
    CHECK(t.positions.size() == 151);
    CHECK(t.strategy == Strategy::CornerTour);
    for (int i = 1; i <= 44; ++i) {
        CHECK(t.positions[static_cast<std::size_t>(i)] == GridPosition{i, 0});
    }
    CHECK(t.positions[45] == GridPosition{44, 1});
    check_trajectory_invariants(t, kMap);
}

TEST_CASE("corner_tour staircase moves x first, then y") {
    const Trajectory t = corner_tour(kMap, {10, 10}, 150);
    for (int i = 1; i <= 10; ++i) {
        CHECK(t.positions[static_cast<std::size_t>(i)] == GridPosition{10 - i, 10});
    }
    for (int i = 1; i <= 10; ++i) {
        CHECK(t.positions[static_cast<std::size_t>(10 + i)] == GridPosition{0, 10 - i});
    }
    CHECK(t.positions[21] == GridPosition{1, 0});  // counter-clockwise from (0,0)
}

TEST_CASE("corner_tour truncates at exactly steps+1 positions") {
    const Trajectory t = corner_tour(kMap, {10, 10}, 5);
    CHECK(t.positions.size() == 6);
    CHECK(t.positions[5] == GridPosition{5, 10});
}

TEST_CASE("corner_tour is deterministic and never pauses") {
    const Trajectory a = corner_tour(kMap, {17, 31}, 150);
    const Trajectory b = corner_tour(kMap, {17, 31}, 150);
    CHECK(a.positions == b.positions);
    for (std::size_t i = 1; i < a.positions.size(); ++i) {
        CHECK(!(a.positions[i] == a.positions[i - 1]));
    }
}

TEST_CASE("corner_tour visits at least 3 corners from every start in 150 steps") {
    const auto corners = kMap.corners();
    for (int x = 0; x < kMap.width_cells; ++x) {
        for (int y = 0; y < kMap.width_cells; ++y) {
            const Trajectory t = corner_tour(kMap, {x, y}, 150);
            std::set<int> visited;
            for (const auto& p : t.positions) {
                for (int c = 0; c < 4; ++c) {
                    if (p == corners[static_cast<std::size_t>(c)]) visited.insert(c);
                }
            }
            if (visited.size() < 3) {
                FAIL("only ", visited.size(), " corners from start (", x, ",", y, ")");
            }
            check_trajectory_invariants(t, kMap);
        }
    }
}

TEST_CASE("corner_tour rejects bad inputs") {
    CHECK_THROWS_AS(corner_tour(kMap, {45, 45}, 10), std::invalid_argument);
    CHECK_THROWS_AS(corner_tour(kMap, {4, 4}, 0), std::invalid_argument);
}

TEST_CASE("corner_tour spreads positions wider than a random walk") {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const GridPosition start{static_cast<int>(rng.bounded(45)),
                                 static_cast<int>(rng.bounded(45))};
        const Trajectory tour = corner_tour(kMap, start, 150);
        const Trajectory walk = random_walk(kMap, start, 150, rng);
        if (spread(tour) > spread(walk)) ++wins;
    }
    CHECK(wins >= 95);
}
