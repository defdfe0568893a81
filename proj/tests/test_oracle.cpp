#include "btt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <gtest/gtest.h>
#include <stdexcept>
#include <vector>

#include "btt/scenario.hpp"
#include "helpers.hpp"

using namespace btt;

namespace {

// 3 on one side of the diagonal band, 1 on the other, 0 inside the band.
struct SplitDiagonalMap : CostMap {
    int dimension() const override { return 2; }
    double eval(std::span<const double> x) const override {
        if (x[0] - x[1] > 0.02) return 3.0;
        if (x[1] - x[0] > 0.02) return 1.0;
        return 0.0;
    }
};

}  // namespace

TEST(ExplicitGraph, EdgeSetMatchesDefinition) {
    const SampleSet s = sample(60, 2, 5);
    const AnalyticCostMap m = AnalyticCostMap::constant(2, 0.0);
    const double r = 0.3;
    const ExplicitGraph g = build_explicit_graph(m, s, r, 0.01);

    std::vector<std::vector<char>> present(s.size(), std::vector<char>(s.size(), 0));
    for (const auto& e : g.edges) {
        EXPECT_NE(e.from, e.to);
        EXPECT_TRUE(leq(s.point(e.from), s.point(e.to)));
        EXPECT_LE(dist_sq(s.point(e.from), s.point(e.to)), r * r);
        present[e.from][e.to] = 1;
    }
    for (std::uint32_t u = 0; u < s.size(); ++u) {
        for (std::uint32_t v = 0; v < s.size(); ++v) {
            const bool expect = u != v && dist_sq(s.point(u), s.point(v)) <= r * r &&
                                leq(s.point(u), s.point(v));
            EXPECT_EQ(bool(present[u][v]), expect) << u << "->" << v;
        }
    }
}

TEST(ExplicitDijkstra, TrivialDirectEdge) {
    const SampleSet s = sample(0, 3, 0);
    const AnalyticCostMap m = AnalyticCostMap::constant(3, 1.25);
    const auto path = explicit_bottleneck_dijkstra(m, s, std::sqrt(3.0) + 0.01, 0.01);
    ASSERT_TRUE(path.has_value());
    EXPECT_DOUBLE_EQ(path->cost, 1.25);
    EXPECT_EQ(path->vertices.size(), 2u);
}

TEST(ExplicitDijkstra, HandBuiltDetour) {
    // Two parallel two-hop chains; the lower chain crosses the 3-region, the
    // upper chain the 1-region, so the optimum threads the upper chain.
    SampleSet s;
    s.d = 2;
    s.n = 2;
    s.coords = {0, 0, 0.5, 0.45, 0.45, 0.5, 1, 1};
    const SplitDiagonalMap m;
    const auto path = explicit_bottleneck_dijkstra(m, s, 0.75, 0.01);
    ASSERT_TRUE(path.has_value());
    EXPECT_DOUBLE_EQ(path->cost, 1.0);
    ASSERT_EQ(path->vertices.size(), 3u);
    EXPECT_EQ(path->vertices[1], (std::vector<double>{0.45, 0.5}));
}

TEST(ExplicitDijkstra, AbsentWhenDisconnected) {
    const SampleSet s = sample(0, 2, 0);
    const AnalyticCostMap m = AnalyticCostMap::constant(2, 0.0);
    EXPECT_FALSE(explicit_bottleneck_dijkstra(m, s, 1.2, 0.01).has_value());
}

TEST(ExplicitDijkstra, CostDominatesEndpointEvals) {
    SplitMix64 rng(41);
    for (int it = 0; it < 20; ++it) {
        const auto inst = btt::testing::random_instance(rng);
        const SampleSet s = sample(inst.n, inst.d, inst.seed);
        const auto path = explicit_bottleneck_dijkstra(inst.map, s, inst.radius, inst.h);
        if (!path) continue;
        const double at_start = inst.map.eval(s.point(s.start_id()));
        const double at_goal = inst.map.eval(s.point(s.goal_id()));
        EXPECT_GE(path->cost, std::max(at_start, at_goal));
    }
}

TEST(ExplicitDijkstra, NoRandomMonotonePathBeatsIt) {
    SplitMix64 rng(43);
    int checked_paths = 0;
    for (int it = 0; it < 10; ++it) {
        const int n = 40 + int(rng.next() % 60);
        const SampleSet s = sample(n, 2, rng.next());
        const AnalyticCostMap m = btt::testing::random_analytic_map(2, rng);
        const double r = connection_radius(n, 2, 2.0);  // generous: plenty of paths
        const auto best = explicit_bottleneck_dijkstra(m, s, r, 0.01);
        if (!best) continue;
        const ExplicitGraph g = build_explicit_graph(m, s, r, 0.01);
        const double start_cost = m.eval(s.point(s.start_id()));

        for (int walk = 0; walk < 60; ++walk) {
            std::uint32_t cur = s.start_id();
            double cost = start_cost;
            for (int hop = 0; hop < 200 && cur != s.goal_id(); ++hop) {
                const auto& out = g.adj[cur];
                if (out.empty()) break;
                const auto& [next, w] = out[rng.next() % out.size()];
                cost = std::max(cost, w);
                cur = next;
            }
            if (cur != s.goal_id()) continue;
            ++checked_paths;
            EXPECT_GE(cost, best->cost);
        }
    }
    EXPECT_GT(checked_paths, 20);
}

TEST(GridDp, IdenticalCurvesCostZero) {
    const Polyline c(std::vector<Point2>{{0, 0}, {1, 0}, {1, 2}});
    for (const int k : {2, 17, 101}) {
        EXPECT_DOUBLE_EQ(grid_frechet_bottleneck(c, c, k), 0.0);
    }
}

TEST(GridDp, ParallelOffsetSegments) {
    const Polyline a(std::vector<Point2>{{0, 0}, {1, 0}});
    const Polyline b(std::vector<Point2>{{0, 0.1}, {1, 0.1}});
    EXPECT_DOUBLE_EQ(grid_frechet_bottleneck(a, b, 11), 0.1);
}

TEST(GridDp, RejectsTinyGrids) {
    const Polyline a(std::vector<Point2>{{0, 0}, {1, 0}});
    EXPECT_THROW(grid_frechet_bottleneck(a, a, 1), std::invalid_argument);
    EXPECT_THROW(grid_frechet_bottleneck(a, a, 0), std::invalid_argument);
}

TEST(GridDp, SymmetricInItsCurves) {
    const ScenarioConfig cfg = build_p1(2);
    for (const int k : {37, 120}) {
        EXPECT_EQ(grid_frechet_bottleneck(cfg.curves[0], cfg.curves[1], k),
                  grid_frechet_bottleneck(cfg.curves[1], cfg.curves[0], k));
    }
}

TEST(GridDp, RefinementNeverIncreasesTheValue) {
    const ScenarioConfig cfg = build_p1(2);
    int k = 51;
    double prev = grid_frechet_bottleneck(cfg.curves[0], cfg.curves[1], k);
    for (int step = 0; step < 3; ++step) {
        k = 2 * k - 1;  // the coarse grid embeds into the refined one
        const double cur = grid_frechet_bottleneck(cfg.curves[0], cfg.curves[1], k);
        EXPECT_LE(cur, prev + 1e-15);
        prev = cur;
    }
}

TEST(GridDp, FiveLoopValueNearAnchor) {
    const ScenarioConfig cfg = build_p1(2);
    const double v = grid_frechet_bottleneck(cfg.curves[0], cfg.curves[1], 201);
    EXPECT_NEAR(v, 0.34, 0.03);
}

TEST(Equivalence, LazyPlannerMatchesEagerReference) {
    SplitMix64 rng(47);
    int solved = 0;
    for (int it = 0; it < 30; ++it) {
        const auto inst = btt::testing::random_instance(rng);
        const SampleSet s = sample(inst.n, inst.d, inst.seed);
        const PlanResult lazy = btt_plan_on(inst.map, s, inst.radius, inst.h);
        const auto eager = explicit_bottleneck_dijkstra(inst.map, s, inst.radius, inst.h);
        ASSERT_EQ(lazy.path.has_value(), eager.has_value()) << "instance " << it;
        if (lazy.path) {
            ++solved;
            EXPECT_EQ(lazy.path->cost, eager->cost) << "instance " << it;
        }
    }
    EXPECT_GT(solved, 5);
}
