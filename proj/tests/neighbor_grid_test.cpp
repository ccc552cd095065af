#include <gtest/gtest.h>

#include <vector>

#include "memesim/error.hpp"
#include "memesim/neighbor_grid.hpp"
#include "memesim/rng.hpp"
#include "support/oracles.hpp"

namespace memesim {
namespace {

std::vector<Position> random_points(RngStream& rng, std::size_t n, WorldExtent w) {
    std::vector<Position> pts(n);
    for (auto& p : pts) p = {rng.uniform01() * w.width, rng.uniform01() * w.height};
    return pts;
}

TEST(NeighborGrid, MatchesBruteForceOnRandomWorlds) {
    RngStream rng(31, StreamLabel::placement);
    std::vector<std::uint32_t> got;
    for (int trial = 0; trial < 50; ++trial) {
        const WorldExtent w{5 + 200 * rng.uniform01(), 5 + 200 * rng.uniform01()};
        const double radius = 0.1 + 8 * rng.uniform01();
        const auto pts = random_points(rng, 300, w);
        NeighborGrid grid(w, radius);
        grid.rebuild(pts);
        for (const auto& p : pts) {
            grid.query(p, got);
            ASSERT_EQ(got, testing::brute_force_neighbors(pts, p, radius, w));
        }
    }
}

TEST(NeighborGrid, RadiusLargerThanWorldHasNoDuplicates) {
    RngStream rng(32, StreamLabel::placement);
    const WorldExtent w{10, 4};
    const auto pts = random_points(rng, 60, w);
    for (double radius : {3.0, 5.0, 20.0}) {
        NeighborGrid grid(w, radius);
        grid.rebuild(pts);
        std::vector<std::uint32_t> got;
        for (const auto& p : pts) {
            grid.query(p, got);
            ASSERT_EQ(got, testing::brute_force_neighbors(pts, p, radius, w));
        }
    }
}

TEST(NeighborGrid, CellsAreAtLeastRadiusWide) {
    NeighborGrid grid({200, 200}, 2.0);
    EXPECT_GE(200.0 / grid.cells_x(), 2.0);
    EXPECT_GE(200.0 / grid.cells_y(), 2.0);
    EXPECT_GT(grid.cells_x(), 50);
}

TEST(NeighborGrid, PointsOnCellBoundariesAndWrapEdges) {
    const WorldExtent w{20, 20};
    const std::vector<Position> pts{{0, 0}, {2, 0}, {19.999999, 0}, {18, 0}, {0, 18}, {10, 10}, {12, 10}};
    NeighborGrid grid(w, 2.0);
    grid.rebuild(pts);
    std::vector<std::uint32_t> got;
    for (const auto& p : pts) {
        grid.query(p, got);
        EXPECT_EQ(got, testing::brute_force_neighbors(pts, p, 2.0, w));
    }
}

TEST(NeighborGrid, RejectsBadGeometry) {
    EXPECT_THROW(NeighborGrid({0, 10}, 1.0), InputError);
    EXPECT_THROW(NeighborGrid({10, 10}, 0.0), InputError);
}

}  // namespace
}  // namespace memesim
