#pragma once

// Lazy bottleneck search over the implicit monotone RGG: repeatedly extract
// the cheapest finite-cost vertex, stop when the goal corner comes out,
// otherwise relax its monotone in-radius neighbors with
// c_new = max(c(z), segment bottleneck cost). Edge costs are computed only
// when a relaxation actually touches the edge.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "btt/costmap.hpp"
#include "btt/graph.hpp"

namespace btt {

struct NodeState {
    double cost = kInf;
    std::uint32_t parent = kNoId;
};

// A monotone start-to-goal vertex sequence with its bottleneck cost.
struct PlanPath {
    std::vector<std::vector<double>> vertices;
    double cost = kInf;
};

struct RunStats {
    std::uint64_t nodes_expanded = 0;        // vertices whose neighbors were examined
    std::uint64_t edges_considered = 0;      // neighbor candidates returned by radius queries
    std::uint64_t monotone_edges_accepted = 0;  // candidates passing the partial-order filter
    std::uint64_t costmap_evals = 0;
    double wall_time_s = 0.0;
};

struct PlanResult {
    std::optional<PlanPath> path;
    RunStats stats;
};

// Called once per extraction, in extraction order (the goal included).
using ExtractObserver = std::function<void(std::uint32_t id, double cost)>;

// Rebuilds the start-to-goal vertex sequence by following parents from the
// goal. Broken chains (dangling parent, cycle, finite-cost goal with no chain
// to the start) indicate internal corruption and throw.
inline PlanPath extract_path(const std::vector<NodeState>& states, const SampleSet& samples) {
    const std::uint32_t goal = samples.goal_id();
    if (!(states[goal].cost < kInf)) throw std::logic_error("goal has no finite cost");
    PlanPath path;
    path.cost = states[goal].cost;
    std::uint32_t cur = goal;
    std::size_t steps = 0;
    while (true) {
        const auto p = samples.point(cur);
        path.vertices.emplace_back(p.begin(), p.end());
        if (cur == samples.start_id()) break;
        cur = states[cur].parent;
        if (cur == kNoId) throw std::logic_error("parent chain does not reach the start");
        if (++steps > states.size()) throw std::logic_error("parent chain contains a cycle");
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

// Independent recomputation of a path's bottleneck cost: the max over every
// vertex evaluation and every sampled edge. Matches the planner's reported
// cost exactly when called with the planner's h.
inline double path_cost(const CostMap& m, const PlanPath& path, double h) {
    if (path.vertices.empty()) throw std::invalid_argument("empty path");
    double worst = -kInf;
    for (const auto& v : path.vertices) {
        const double c = m.eval(v);
        if (std::isnan(c)) throw std::domain_error("cost map produced NaN");
        if (c > worst) worst = c;
    }
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        worst = std::max(worst, edge_cost(m, path.vertices[i], path.vertices[i + 1], h));
    }
    return worst;
}

namespace detail {

// Consecutive vertices must be ordered and within hop distance r; every
// returned path is checked before it leaves the planner.
inline void check_path(const PlanPath& path, double r) {
    if (!(path.cost < kInf)) throw std::logic_error("returned path has infinite cost");
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const std::span<const double> a = path.vertices[i];
        const std::span<const double> b = path.vertices[i + 1];
        if (!leq(a, b)) throw std::logic_error("returned path violates monotonicity");
        if (dist_sq(a, b) > r * r) throw std::logic_error("returned path hop exceeds radius");
    }
}

}  // namespace detail

// Search over a caller-supplied sample set (fixture entry point; btt_plan is
// the production wrapper that also draws the samples).
inline PlanResult btt_plan_on(const CostMap& m, const SampleSet& samples, double r, double h,
                              const ExtractObserver& observer = {}) {
    if (m.dimension() != samples.d) throw std::invalid_argument("cost map dimension mismatch");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    const CountingCostMap counted(m);
    const std::uint32_t start = samples.start_id();
    const std::uint32_t goal = samples.goal_id();
    std::vector<NodeState> states(samples.size());
    GridIndex index(samples, r);
    PlanResult res;

    const double start_cost = counted.eval(samples.point(start));
    if (std::isnan(start_cost)) throw std::domain_error("cost map produced NaN");
    states[start].cost = start_cost;

    using Entry = std::pair<double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    if (start_cost < kInf) heap.emplace(start_cost, start);

    std::vector<std::uint32_t> nbrs;
    nbrs.reserve(64);

    while (!heap.empty()) {
        const auto [cost, z] = heap.top();
        heap.pop();
        if (cost != states[z].cost) continue;  // superseded by a later decrease
        if (observer) observer(z, cost);
        if (z == goal) {
            res.path = extract_path(states, samples);
            detail::check_path(*res.path, r);
            break;
        }
        index.deactivate(z);
        ++res.stats.nodes_expanded;
        const std::span<const double> zp = samples.point(z);
        index.radius_query(zp, r, nbrs, z);
        res.stats.edges_considered += nbrs.size();
        for (const std::uint32_t x : nbrs) {
            const std::span<const double> xp = samples.point(x);
            if (!leq(zp, xp)) continue;
            ++res.stats.monotone_edges_accepted;
            if (!(cost < states[x].cost)) continue;
            const double c_new = std::max(cost, edge_cost(counted, zp, xp, h));
            if (c_new < states[x].cost) {
                states[x].cost = c_new;
                states[x].parent = z;
                if (c_new < kInf) heap.emplace(c_new, x);
            }
        }
    }

    res.stats.costmap_evals = counted.evals();
    res.stats.wall_time_s = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline PlanResult btt_plan(const CostMap& m, const GraphParams& params,
                           const ExtractObserver& observer = {}) {
    if (m.dimension() != params.d) throw std::invalid_argument("cost map dimension mismatch");
    const auto t0 = std::chrono::steady_clock::now();
    const SampleSet samples = sample(params.n, params.d, params.seed);
    PlanResult res = btt_plan_on(m, samples, params.radius(), params.h, observer);
    res.stats.wall_time_s = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace btt
