#include <gtest/gtest.h>

#include <random>

#include "explore/errors.hpp"
#include "explore/kernels.hpp"
#include "explore/planner.hpp"
#include "oracles.hpp"

using namespace explore;

namespace {

TEST(Kernels, FrontierMaskSerialMatchesDefinition) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const OccupancyGrid g = oracle::random_grid(17, 13, 0.35, 0.2, rng);
        for (Connectivity conn : {Connectivity::Four, Connectivity::Eight}) {
            const auto mask = frontier_mask_serial(g, conn);
            for (int r = 0; r < g.height(); ++r) {
                for (int c = 0; c < g.width(); ++c) {
                    ASSERT_EQ(mask[g.index_of({r, c})] != 0, oracle::frontier_point(g, {r, c}, conn));
                }
            }
        }
    }
}

TEST(Kernels, ParallelVariantsMatchSerial) {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 70);
        const int h = 1 + static_cast<int>(rng() % 70);
        const OccupancyGrid g = oracle::random_grid(w, h, 0.5, 0.15, rng);
        for (Connectivity conn : {Connectivity::Four, Connectivity::Eight}) {
            EXPECT_EQ(frontier_mask_parallel(g, conn), frontier_mask_serial(g, conn));
            EXPECT_EQ(frontier_mask(g, conn, Exec::Parallel), frontier_mask(g, conn, Exec::Serial));
        }
        for (double radius : {0.0, 1.0, 1.5, 2.0, 2.9}) {
            EXPECT_EQ(traversable_mask_parallel(g, radius), traversable_mask_serial(g, radius));
        }
    }
}

TEST(Kernels, TraversableMaskMatchesAllPairsOracle) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const OccupancyGrid g = oracle::random_grid(23, 19, 0.8, 0.03, rng);
        for (double radius : {0.0, 1.0, 1.5, 2.2, 3.0}) {
            ASSERT_EQ(traversable_mask_serial(g, radius), oracle::traversable(g, radius))
                << "radius " << radius;
        }
    }
}

TEST(Kernels, DiscOffsets) {
    EXPECT_EQ(disc_offsets(0.0).size(), 1u);
    EXPECT_EQ(disc_offsets(1.0).size(), 5u);
    EXPECT_EQ(disc_offsets(1.5).size(), 9u);
    EXPECT_EQ(disc_offsets(2.0).size(), 13u);
    EXPECT_THROW(disc_offsets(-0.5), PreconditionError);
}

}  // namespace
