#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "explore/errors.hpp"
#include "explore/map_io.hpp"
#include "explore/world_sim.hpp"
#include "oracles.hpp"

using namespace explore;

namespace {

using V = std::vector<CellIndex>;
constexpr double kPi = std::numbers::pi;

TEST(CastRay, AxisAlignedExamples) {
    WorldMap w(10, 10);
    RayResult r = cast_ray(w, {5, 5}, 0.0, 3.0);
    EXPECT_EQ(r.traversed, (V{{5, 5}, {5, 6}, {5, 7}, {5, 8}}));
    EXPECT_FALSE(r.hit);

    w.set_occupied({5, 7}, true);
    r = cast_ray(w, {5, 5}, 0.0, 3.0);
    EXPECT_EQ(r.traversed, (V{{5, 5}, {5, 6}}));
    ASSERT_TRUE(r.hit);
    EXPECT_EQ(*r.hit, (CellIndex{5, 7}));
}

TEST(CastRay, AngleConvention) {
    const WorldMap w(9, 9);
    EXPECT_EQ(cast_ray(w, {4, 4}, kPi / 2, 2.0).traversed, (V{{4, 4}, {5, 4}, {6, 4}}));
    EXPECT_EQ(cast_ray(w, {4, 4}, kPi, 2.0).traversed, (V{{4, 4}, {4, 3}, {4, 2}}));
    EXPECT_EQ(cast_ray(w, {4, 4}, -kPi / 2, 2.0).traversed, (V{{4, 4}, {3, 4}, {2, 4}}));
}

TEST(CastRay, StopsAtBorder) {
    const WorldMap w(4, 4);
    const RayResult r = cast_ray(w, {1, 1}, 0.0, 10.0);
    EXPECT_EQ(r.traversed, (V{{1, 1}, {1, 2}, {1, 3}}));
    EXPECT_FALSE(r.hit);
}

TEST(CastRay, DiagonalMatchesLineOracle) {
    const WorldMap w(30, 30);
    const RayResult r = cast_ray(w, {5, 5}, kPi / 4, 12.0);
    const auto line = oracle::sampled_line({5, 5}, {5 + 8, 5 + 8});
    ASSERT_TRUE(line);
    EXPECT_EQ(r.traversed, *line);
}

TEST(CastRay, AllAnglesMatchLineOracleAwayFromTies) {
    const WorldMap w(61, 61);
    const CellIndex o{30, 30};
    int compared = 0;
    for (double range : {3.0, 7.5, 14.0, 25.0}) {
        for (int k = 0; k < 720; ++k) {
            const double angle = 2 * kPi * k / 720;
            const CellIndex end{o.row + static_cast<int>(std::lround(range * std::sin(angle))),
                                o.col + static_cast<int>(std::lround(range * std::cos(angle)))};
            const auto line = oracle::sampled_line(o, end);
            if (!line) {
                continue;
            }
            V expected;
            for (const CellIndex& c : *line) {
                const double d2 = std::pow(c.row - o.row, 2) + std::pow(c.col - o.col, 2);
                if (d2 > range * range + 1e-9) {
                    break;
                }
                expected.push_back(c);
            }
            ASSERT_EQ(cast_ray(w, o, angle, range).traversed, expected) << "angle " << angle;
            ++compared;
        }
    }
    EXPECT_GT(compared, 2000);
}

TEST(CastRay, DistanceStrictlyIncreases) {
    const WorldMap w(41, 41);
    for (int k = 0; k < 360; ++k) {
        const RayResult r = cast_ray(w, {20, 20}, 2 * kPi * k / 360, 15.0);
        double last = -1.0;
        for (const CellIndex& c : r.traversed) {
            const double d = std::hypot(c.row - 20, c.col - 20);
            ASSERT_GT(d, last);
            ASSERT_LE(d, 15.0 + 1e-9);
            last = d;
        }
    }
}

TEST(CastRay, Preconditions) {
    WorldMap w(4, 4);
    w.set_occupied({1, 1}, true);
    EXPECT_THROW(cast_ray(w, {1, 1}, 0.0, 3.0), PreconditionError);
    EXPECT_THROW(cast_ray(w, {4, 0}, 0.0, 3.0), PreconditionError);
}

// 5x5 walled room inside a larger open world; robot at its centre.
AsciiWorld sealed_room() {
    return load_ascii_world(
        ".........\n"
        ".........\n"
        "..#####..\n"
        "..#...#..\n"
        "..#.R.#..\n"
        "..#...#..\n"
        "..#####..\n"
        ".........\n"
        ".........\n");
}

TEST(Sense, SealedRoomRevealsExactlyTheRoom) {
    const AsciiWorld a = sealed_room();
    for (double range : {4.0, 6.0, 20.0}) {
        OccupancyGrid belief(a.world.width(), a.world.height());
        const std::size_t n = sense(a.world, a.start, SensorConfig{range, 360}, belief);
        EXPECT_EQ(n, 25u);
        for (int r = 0; r < 9; ++r) {
            for (int c = 0; c < 9; ++c) {
                const bool interior = r >= 3 && r <= 5 && c >= 3 && c <= 5;
                const bool wall = !interior && r >= 2 && r <= 6 && c >= 2 && c <= 6;
                const CellState want =
                    interior ? CellState::Free : wall ? CellState::Occupied : CellState::Unknown;
                ASSERT_EQ(belief.at({r, c}), want) << "range " << range << " cell " << CellIndex{r, c};
            }
        }
    }
}

TEST(Sense, IdempotentAndNoOpOnFullVisibility) {
    const AsciiWorld a = sealed_room();
    OccupancyGrid belief(9, 9);
    const SensorConfig cfg{6.0, 360};
    sense(a.world, a.start, cfg, belief);
    const OccupancyGrid once = belief;
    EXPECT_EQ(sense(a.world, a.start, cfg, belief), 0u);
    EXPECT_EQ(belief, once);
}

TEST(Sense, RandomWorldsAreMonotoneSoundIdempotent) {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        OccupancyGrid g(30, 24, 0.05, CellState::Free);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (u(rng) < 0.25) {
                g[i] = CellState::Occupied;
            }
        }
        const WorldMap w(g);
        OccupancyGrid belief(30, 24);
        for (int pose = 0; pose < 5; ++pose) {
            CellIndex c{static_cast<int>(rng() % 24), static_cast<int>(rng() % 30)};
            if (w.occupied(c)) {
                continue;
            }
            const OccupancyGrid before = belief;
            const std::size_t n =
                sense(w, Pose{c}, SensorConfig{5.0 + static_cast<double>(pose), 180}, belief);
            const OccupancyGrid after = belief;
            EXPECT_EQ(sense(w, Pose{c}, SensorConfig{5.0 + static_cast<double>(pose), 180}, belief), 0u);
            EXPECT_EQ(belief, after);
            EXPECT_EQ(after.at(c), CellState::Free);
            std::size_t changed = 0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (before[i] != CellState::Unknown) {
                    ASSERT_EQ(after[i], before[i]);
                }
                if (after[i] != CellState::Unknown) {
                    ASSERT_EQ(after[i], g[i]);
                }
                changed += before[i] != after[i];
            }
            EXPECT_EQ(changed, n);
        }
    }
}

TEST(Sense, OccludedCellsStayUnknown) {
    // A full-height wall at col 3: nothing right of it is visible from the left.
    WorldMap w(10, 6);
    for (int r = 0; r < 6; ++r) {
        w.set_occupied({r, 3}, true);
    }
    OccupancyGrid belief(10, 6);
    sense(w, Pose{{2, 1}}, SensorConfig{12.0, 720}, belief);
    for (int r = 0; r < 6; ++r) {
        for (int c = 4; c < 10; ++c) {
            EXPECT_EQ(belief.at({r, c}), CellState::Unknown);
        }
    }
}

TEST(Sense, Preconditions) {
    const WorldMap w(5, 5);
    OccupancyGrid wrong(4, 5);
    EXPECT_THROW(sense(w, Pose{{2, 2}}, SensorConfig{}, wrong), ShapeError);
    OccupancyGrid belief(5, 5);
    EXPECT_THROW(sense(w, Pose{{2, 2}}, SensorConfig{0.5, 360}, belief), PreconditionError);
    EXPECT_THROW(sense(w, Pose{{2, 2}}, SensorConfig{3.0, 3}, belief), PreconditionError);
    EXPECT_THROW(sense(w, Pose{{9, 2}}, SensorConfig{}, belief), PreconditionError);
}

}  // namespace
