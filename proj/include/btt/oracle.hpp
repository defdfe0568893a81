#pragma once

// Brute-force references the planner is validated against: an eager
// explicit-graph bottleneck Dijkstra (exact equivalence on small n), and a
// k x k dynamic program for the two-curve monotone bottleneck matching.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "btt/costmap.hpp"
#include "btt/graph.hpp"
#include "btt/planner.hpp"

namespace btt {

struct ExplicitEdge {
    std::uint32_t from;
    std::uint32_t to;
    double cost;
};

// Fully materialized monotone RGG: every ordered pair (u,v) with u != v,
// u preceding v coordinate-wise, and |u-v| <= r, with precomputed edge cost.
struct ExplicitGraph {
    SampleSet samples;
    std::vector<ExplicitEdge> edges;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
};

inline ExplicitGraph build_explicit_graph(const CostMap& m, const SampleSet& samples,
                                          double r, double h,
                                          std::uint64_t* costmap_evals = nullptr) {
    const CountingCostMap counted(m);
    ExplicitGraph g;
    g.samples = samples;
    const std::uint32_t N = samples.size();
    g.adj.resize(N);
    const double rr = r * r;
    for (std::uint32_t u = 0; u < N; ++u) {
        const auto up = samples.point(u);
        for (std::uint32_t v = 0; v < N; ++v) {
            if (u == v) continue;
            const auto vp = samples.point(v);
            if (dist_sq(up, vp) > rr) continue;
            if (!leq(up, vp)) continue;
            const double w = edge_cost(counted, up, vp, h);
            g.edges.push_back({u, v, w});
            g.adj[u].emplace_back(v, w);
        }
    }
    if (costmap_evals) *costmap_evals += counted.evals();
    return g;
}

// Textbook bottleneck Dijkstra over a prebuilt graph; shares the relaxation
// rule and (cost, id) tie-breaking with the lazy planner.
inline std::optional<PlanPath> bottleneck_dijkstra_on(const ExplicitGraph& g,
                                                      double start_cost,
                                                      RunStats* stats = nullptr) {
    const std::uint32_t start = g.samples.start_id();
    const std::uint32_t goal = g.samples.goal_id();
    std::vector<NodeState> states(g.samples.size());
    states[start].cost = start_cost;

    using Entry = std::pair<double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    if (start_cost < kInf) heap.emplace(start_cost, start);

    while (!heap.empty()) {
        const auto [cost, z] = heap.top();
        heap.pop();
        if (cost != states[z].cost) continue;
        if (z == goal) {
            PlanPath p = extract_path(states, g.samples);
            return p;
        }
        if (stats) ++stats->nodes_expanded;
        for (const auto& [x, w] : g.adj[z]) {
            if (!(cost < states[x].cost)) continue;
            const double c_new = std::max(cost, w);
            if (c_new < states[x].cost) {
                states[x].cost = c_new;
                states[x].parent = z;
                if (c_new < kInf) heap.emplace(c_new, x);
            }
        }
    }
    return std::nullopt;
}

// Eager reference run: materialize the whole graph, then search it.
// Intended for n small enough that the O(n^2) pair scan is comfortable.
inline std::optional<PlanPath> explicit_bottleneck_dijkstra(const CostMap& m,
                                                            const SampleSet& samples,
                                                            double r, double h,
                                                            RunStats* stats = nullptr) {
    std::uint64_t evals = 0;
    const ExplicitGraph g = build_explicit_graph(m, samples, r, h, &evals);

    const CountingCostMap counted(m);
    const double start_cost = counted.eval(samples.point(samples.start_id()));
    if (std::isnan(start_cost)) throw std::domain_error("cost map produced NaN");
    evals += counted.evals();

    std::optional<PlanPath> path = bottleneck_dijkstra_on(g, start_cost, stats);
    if (stats) {
        stats->edges_considered += g.edges.size();
        stats->monotone_edges_accepted += g.edges.size();
        stats->costmap_evals += evals;
    }
    return path;
}

// Monotone bottleneck matching of two curves on the k x k grid of parameter
// pairs tau_i = i/(k-1): D[0][0] = cost(0,0),
// D[i][j] = max(cost(i,j), min(D[i-1][j], D[i][j-1], D[i-1][j-1])).
// Converges to the continuous optimum from above as k grows.
inline double grid_frechet_bottleneck(const Polyline& c1, const Polyline& c2, int k) {
    if (k < 2) throw std::invalid_argument("grid needs at least 2 points per axis");

    std::vector<Point2> p1(k), p2(k);
    for (int i = 0; i < k; ++i) {
        const double t = double(i) / double(k - 1);
        p1[i] = c1.eval(t);
        p2[i] = c2.eval(t);
    }

    std::vector<double> prev(k), cur(k);
    for (int j = 0; j < k; ++j) {
        const double c = dist(p1[0], p2[j]);
        prev[j] = (j == 0) ? c : std::max(c, prev[j - 1]);
    }
    for (int i = 1; i < k; ++i) {
        cur[0] = std::max(dist(p1[i], p2[0]), prev[0]);
        for (int j = 1; j < k; ++j) {
            const double best_pred = std::min({prev[j], cur[j - 1], prev[j - 1]});
            cur[j] = std::max(dist(p1[i], p2[j]), best_pred);
        }
        std::swap(prev, cur);
    }
    return prev[k - 1];
}

}  // namespace btt
