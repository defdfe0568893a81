#pragma once

// Shared fixtures for the test binaries: random closed-form cost maps and
// random planner instances for planner-vs-reference comparisons.

#include <vector>

#include "btt/costmap.hpp"
#include "btt/graph.hpp"

namespace btt::testing {

// A random closed-form map: constant, sloped plane, or a few gaussian bumps
// (some negative, so minima sit away from the corners).
inline AnalyticCostMap random_analytic_map(int d, SplitMix64& rng) {
    const std::uint64_t pick = rng.next() % 3;
    if (pick == 0) {
        return AnalyticCostMap::constant(d, -1.0 + 4.0 * rng.next01());
    }
    if (pick == 1) {
        std::vector<double> w(d);
        for (double& v : w) v = -2.0 + 4.0 * rng.next01();
        return AnalyticCostMap::linear(std::move(w), -1.0 + 2.0 * rng.next01());
    }
    std::vector<AnalyticCostMap::Bump> bumps(1 + rng.next() % 3);
    for (auto& b : bumps) {
        b.center.resize(d);
        for (double& c : b.center) c = rng.next01();
        b.amplitude = -2.0 + 4.0 * rng.next01();
        b.width = 0.08 + 0.4 * rng.next01();
    }
    return AnalyticCostMap::bumps(d, std::move(bumps), rng.next01());
}

struct RandomInstance {
    AnalyticCostMap map;
    int n;
    int d;
    std::uint64_t seed;
    double radius;
    double h;
};

// Mixes formula radii (usually feasible) with deliberately small overrides
// (often infeasible) so feasibility agreement gets exercised both ways.
inline RandomInstance random_instance(SplitMix64& rng) {
    const int d = 2 + int(rng.next() % 2);
    const int n = 20 + int(rng.next() % 181);
    const std::uint64_t seed = rng.next();
    double radius = connection_radius(n, d, 1.0);
    if (rng.next() % 3 == 0) radius *= 0.25 + 0.5 * rng.next01();
    return {random_analytic_map(d, rng), n, d, seed, radius, 0.01};
}

}  // namespace btt::testing
