#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "explore/errors.hpp"
#include "explore/frontier.hpp"
#include "explore/planner.hpp"
#include "oracles.hpp"

using namespace explore;

namespace {

constexpr PlannerAlgorithm kAlgorithms[] = {PlannerAlgorithm::BFS, PlannerAlgorithm::Dijkstra,
                                            PlannerAlgorithm::AStar};
constexpr Connectivity kConns[] = {Connectivity::Four, Connectivity::Eight};

Costmap random_costmap(int w, int h, double p_block, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(w * h));
    for (auto& m : mask) {
        m = u(rng) < p_block ? 0 : 1;
    }
    return Costmap(w, h, std::move(mask));
}

std::optional<CellIndex> random_traversable(const Costmap& cm, std::mt19937& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const CellIndex c{static_cast<int>(rng() % static_cast<unsigned>(cm.height())),
                          static_cast<int>(rng() % static_cast<unsigned>(cm.width()))};
        if (cm.traversable(c)) {
            return c;
        }
    }
    return std::nullopt;
}

void expect_valid_path(const Path& p, const Costmap& cm, CellIndex start, CellIndex goal,
                       Connectivity conn) {
    ASSERT_FALSE(p.cells.empty());
    EXPECT_EQ(p.cells.front(), start);
    EXPECT_EQ(p.cells.back(), goal);
    PathCost recount;
    for (std::size_t k = 0; k < p.cells.size(); ++k) {
        ASSERT_TRUE(cm.traversable(p.cells[k]));
        if (k > 0) {
            ASSERT_TRUE(oracle::adjacent(p.cells[k - 1], p.cells[k], conn));
            const bool diag = p.cells[k - 1].row != p.cells[k].row && p.cells[k - 1].col != p.cells[k].col;
            (diag ? recount.diagonal : recount.straight) += 1;
        }
    }
    EXPECT_EQ(recount, p.cost);
}

TEST(Inflate, Examples) {
    OccupancyGrid free(5, 5, 0.05, CellState::Free);
    const Costmap open = inflate(free, 0.0);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            EXPECT_TRUE(open.traversable({r, c}));
        }
    }

    OccupancyGrid one = free;
    one.set({2, 2}, CellState::Occupied);
    for (Exec exec : {Exec::Serial, Exec::Parallel}) {
        const Costmap r1 = inflate(one, 1.0, exec);
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c < 5; ++c) {
                const bool blocked = std::abs(r - 2) + std::abs(c - 2) <= 1;
                EXPECT_EQ(r1.traversable({r, c}), !blocked) << CellIndex{r, c};
            }
        }
        const Costmap r15 = inflate(one, 1.5, exec);
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c < 5; ++c) {
                const bool blocked = std::abs(r - 2) <= 1 && std::abs(c - 2) <= 1;
                EXPECT_EQ(r15.traversable({r, c}), !blocked) << CellIndex{r, c};
            }
        }
    }
    OccupancyGrid unknown(3, 3);
    EXPECT_FALSE(inflate(unknown, 0.0).traversable({1, 1}));
    EXPECT_FALSE(open.traversable({-1, 0}));
    EXPECT_THROW(inflate(free, -1.0), PreconditionError);
}

TEST(Inflate, MonotoneInRadius) {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        const OccupancyGrid g = oracle::random_grid(20, 20, 0.85, 0.05, rng);
        const double radii[] = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.5};
        for (std::size_t k = 1; k < std::size(radii); ++k) {
            const auto& wide = inflate(g, radii[k]).mask();
            const auto& narrow = inflate(g, radii[k - 1]).mask();
            for (std::size_t i = 0; i < wide.size(); ++i) {
                ASSERT_TRUE(!wide[i] || narrow[i]);
            }
        }
    }
}

TEST(Plan, TrivialCases) {
    const Costmap cm(6, 1, std::vector<std::uint8_t>(6, 1));
    for (PlannerAlgorithm a : kAlgorithms) {
        const auto same = plan(cm, {0, 2}, {0, 2}, Connectivity::Four, a);
        ASSERT_TRUE(same);
        EXPECT_EQ(same->cells.size(), 1u);
        EXPECT_EQ(same->length(), 0.0);

        const auto corridor = plan(cm, {0, 0}, {0, 5}, Connectivity::Four, a);
        ASSERT_TRUE(corridor);
        EXPECT_EQ(corridor->length(), 5.0);
    }
    std::vector<std::uint8_t> mask(9, 1);
    mask[4] = 0;
    const Costmap hole(3, 3, mask);
    for (PlannerAlgorithm a : kAlgorithms) {
        EXPECT_FALSE(plan(hole, {0, 0}, {1, 1}, Connectivity::Eight, a));
        EXPECT_THROW(plan(hole, {1, 1}, {0, 0}, Connectivity::Eight, a), PreconditionError);
    }
}

TEST(Plan, ManhattanInOpenGrid) {
    const Costmap cm(12, 9, std::vector<std::uint8_t>(108, 1));
    for (PlannerAlgorithm a : kAlgorithms) {
        const auto p = plan(cm, {1, 2}, {7, 10}, Connectivity::Four, a);
        ASSERT_TRUE(p);
        EXPECT_EQ(p->length(), 14.0);
    }
    const auto d = plan(cm, {1, 2}, {7, 10}, Connectivity::Eight, PlannerAlgorithm::AStar);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->cost, (PathCost{2, 6}));
}

TEST(Plan, MatchesBruteForceOracle) {
    std::mt19937 rng(82);
    for (int trial = 0; trial < 40; ++trial) {
        const Costmap cm = random_costmap(32, 32, 0.1 + 0.02 * (trial % 15), rng);
        const auto s = random_traversable(cm, rng);
        const auto g = random_traversable(cm, rng);
        ASSERT_TRUE(s && g);
        for (Connectivity conn : kConns) {
            const auto len = oracle::shortest(cm, *s, *g, conn, oracle::Metric::Length);
            const auto hops = oracle::shortest(cm, *s, *g, conn, oracle::Metric::Hops);
            for (PlannerAlgorithm a : kAlgorithms) {
                const auto p = plan(cm, *s, *g, conn, a);
                ASSERT_EQ(p.has_value(), len.has_value());
                if (!p) {
                    continue;
                }
                expect_valid_path(*p, cm, *s, *g, conn);
                if (a == PlannerAlgorithm::BFS) {
                    EXPECT_EQ(p->cost.hops(), hops->hops());
                    if (conn == Connectivity::Four) {
                        EXPECT_EQ(p->cost, *len);
                    }
                } else {
                    EXPECT_EQ(p->cost, *len) << to_string(a);
                }
            }
        }
    }
}

TEST(Plan, SymmetricCost) {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const Costmap cm = random_costmap(20, 20, 0.2, rng);
        const auto a = random_traversable(cm, rng);
        const auto b = random_traversable(cm, rng);
        for (Connectivity conn : kConns) {
            const auto ab = plan(cm, *a, *b, conn, PlannerAlgorithm::AStar);
            const auto ba = plan(cm, *b, *a, conn, PlannerAlgorithm::AStar);
            ASSERT_EQ(ab.has_value(), ba.has_value());
            if (ab) {
                EXPECT_EQ(ab->cost, ba->cost);
            }
        }
    }
}

TEST(Plan, NoPathIffFloodFillMisses) {
    std::mt19937 rng(84);
    for (int trial = 0; trial < 30; ++trial) {
        const Costmap cm = random_costmap(16, 16, 0.4, rng);
        const auto s = random_traversable(cm, rng);
        ASSERT_TRUE(s);
        OccupancyGrid shape(16, 16);
        for (Connectivity conn : kConns) {
            const auto reach = oracle::flood(shape, *s, conn, [&](CellIndex c) { return cm.traversable(c); });
            for (int r = 0; r < 16; ++r) {
                for (int c = 0; c < 16; ++c) {
                    const bool found = plan(cm, *s, {r, c}, conn, PlannerAlgorithm::Dijkstra).has_value();
                    ASSERT_EQ(found, reach[static_cast<std::size_t>(r * 16 + c)] != 0);
                }
            }
        }
    }
}

TEST(CostField, AgreesWithSingleQueries) {
    std::mt19937 rng(85);
    for (int trial = 0; trial < 10; ++trial) {
        const Costmap cm = random_costmap(24, 18, 0.25, rng);
        const auto s = random_traversable(cm, rng);
        for (Connectivity conn : kConns) {
            const CostField field(cm, *s, conn);
            EXPECT_EQ(field.start(), *s);
            for (int r = 0; r < 18; ++r) {
                for (int c = 0; c < 24; ++c) {
                    const auto p = plan(cm, *s, {r, c}, conn, PlannerAlgorithm::Dijkstra);
                    const auto cost = field.cost({r, c});
                    ASSERT_EQ(p.has_value(), cost.has_value());
                    ASSERT_EQ(field.reached({r, c}), cost.has_value());
                    if (p) {
                        ASSERT_EQ(p->cost, *cost);
                        const auto q = field.path_to({r, c});
                        ASSERT_TRUE(q);
                        expect_valid_path(*q, cm, *s, {r, c}, conn);
                        ASSERT_EQ(q->cost, *cost);
                    }
                }
            }
        }
    }
}

TEST(GoalForFrontier, Examples) {
    // Free corridor in row 2 ends at the Unknown median (2,4); walls elsewhere.
    OccupancyGrid g(7, 5, 0.05, CellState::Occupied);
    for (int c = 0; c < 4; ++c) {
        g.set({2, c}, CellState::Free);
    }
    g.set({2, 4}, CellState::Unknown);
    const Frontier f = make_frontier({{2, 4}});
    const Costmap cm = inflate(g, 0.0);
    EXPECT_EQ(goal_for_frontier(cm, g, f, Pose{{2, 0}}, Connectivity::Eight), (CellIndex{2, 3}));
    // same fixture with inflation: every candidate is blocked
    const Costmap fat = [&] {
        Costmap m = inflate(g, 1.0);
        m.set_traversable({2, 0}, true);
        return m;
    }();
    EXPECT_FALSE(goal_for_frontier(fat, g, f, Pose{{2, 0}}, Connectivity::Eight));
}

TEST(GoalForFrontier, PicksTheCheapestCandidate) {
    // Median (2,2) with Free cells on both sides; the robot is left of it.
    OccupancyGrid g(9, 5, 0.05, CellState::Free);
    g.set({2, 2}, CellState::Unknown);
    const Frontier f = make_frontier({{2, 2}});
    const Costmap cm = inflate(g, 0.0);
    EXPECT_EQ(goal_for_frontier(cm, g, f, Pose{{2, 0}}, Connectivity::Four), (CellIndex{2, 1}));
    EXPECT_EQ(goal_for_frontier(cm, g, f, Pose{{2, 8}}, Connectivity::Four), (CellIndex{2, 3}));
    // from straight above, (1,2) is one step away
    EXPECT_EQ(goal_for_frontier(cm, g, f, Pose{{0, 2}}, Connectivity::Eight), (CellIndex{1, 2}));
}

TEST(GoalForFrontier, UnreachableCandidatesAreSkipped) {
    OccupancyGrid g(7, 3, 0.05, CellState::Free);
    for (int r = 0; r < 3; ++r) {
        g.set({r, 3}, CellState::Occupied);
    }
    g.set({1, 5}, CellState::Unknown);
    const Frontier f = make_frontier({{1, 5}});
    EXPECT_FALSE(goal_for_frontier(inflate(g, 0.0), g, f, Pose{{1, 0}}, Connectivity::Eight));
}

}  // namespace
