#pragma once

// Benchmark scenario construction and the on-disk scenario format: curve
// layouts for the three shipped coordination problems, kind-specific
// validation, and cost-map instantiation from a loaded config.

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "btt/costmap.hpp"
#include "btt/geometry.hpp"

namespace btt {

enum class ScenarioKind { frechet, safest, leader, analytic };

inline std::string to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::frechet: return "frechet";
        case ScenarioKind::safest: return "safest";
        case ScenarioKind::leader: return "leader";
        case ScenarioKind::analytic: return "analytic";
    }
    throw std::logic_error("unreachable");
}

inline ScenarioKind kind_from_string(const std::string& s) {
    if (s == "frechet") return ScenarioKind::frechet;
    if (s == "safest") return ScenarioKind::safest;
    if (s == "leader") return ScenarioKind::leader;
    if (s == "analytic") return ScenarioKind::analytic;
    throw std::runtime_error("scenario parse error: unknown kind '" + s + "'");
}

// Closed-form map description for kind=analytic files.
struct AnalyticSpec {
    std::string form;  // "constant" | "linear" | "bumps"
    double value = 0.0;
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<AnalyticCostMap::Bump> bumps;

    friend bool operator==(const AnalyticSpec& a, const AnalyticSpec& b) {
        auto bump_eq = [](const AnalyticCostMap::Bump& x, const AnalyticCostMap::Bump& y) {
            return x.center == y.center && x.amplitude == y.amplitude && x.width == y.width;
        };
        if (a.form != b.form || a.value != b.value || a.weights != b.weights ||
            a.bias != b.bias || a.bumps.size() != b.bumps.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.bumps.size(); ++i) {
            if (!bump_eq(a.bumps[i], b.bumps[i])) return false;
        }
        return true;
    }
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::frechet;
    int d = 2;
    std::vector<Polyline> curves;
    std::vector<Segment> walls;
    std::string notes;
    std::optional<AnalyticSpec> analytic;

    friend bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
        auto wall_eq = [](const Segment& x, const Segment& y) {
            return x.a == y.a && x.b == y.b;
        };
        if (a.kind != b.kind || a.d != b.d || a.curves != b.curves ||
            a.notes != b.notes || a.analytic != b.analytic ||
            a.walls.size() != b.walls.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.walls.size(); ++i) {
            if (!wall_eq(a.walls[i], b.walls[i])) return false;
        }
        return true;
    }
};

// Kind-specific arity and dimension rules; throws on the first violation.
inline void validate(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("scenario validation error: " + msg);
    };
    if (cfg.d < 2) fail("d must be >= 2");
    const bool curve_kind = cfg.kind != ScenarioKind::analytic;
    if (curve_kind) {
        if (cfg.curves.size() < 2) fail("kind '" + to_string(cfg.kind) + "' needs >= 2 curves");
        if (int(cfg.curves.size()) != cfg.d) fail("d must equal the curve count");
        if (cfg.analytic) fail("'analytic' field is only valid for kind 'analytic'");
        if (cfg.kind != ScenarioKind::leader && !cfg.walls.empty()) {
            fail("walls are only valid for kind 'leader'");
        }
    } else {
        if (!cfg.curves.empty()) fail("kind 'analytic' takes no curves");
        if (!cfg.walls.empty()) fail("kind 'analytic' takes no walls");
        if (!cfg.analytic) fail("kind 'analytic' needs an 'analytic' field");
        const AnalyticSpec& a = *cfg.analytic;
        if (a.form == "constant") {
            // nothing dimension-dependent
        } else if (a.form == "linear") {
            if (int(a.weights.size()) != cfg.d) fail("linear weights must have length d");
        } else if (a.form == "bumps") {
            for (const auto& b : a.bumps) {
                if (int(b.center.size()) != cfg.d) fail("bump center must have length d");
                if (!(b.width > 0.0)) fail("bump width must be positive");
            }
        } else {
            fail("unknown analytic form '" + a.form + "'");
        }
    }
}

inline std::unique_ptr<CostMap> make_cost_map(const ScenarioConfig& cfg) {
    validate(cfg);
    switch (cfg.kind) {
        case ScenarioKind::frechet:
            return std::make_unique<FrechetCostMap>(cfg.curves);
        case ScenarioKind::safest:
            return std::make_unique<SafestCoordCostMap>(cfg.curves);
        case ScenarioKind::leader:
            return std::make_unique<LeaderFollowCostMap>(cfg.curves, cfg.walls);
        case ScenarioKind::analytic: {
            const AnalyticSpec& a = *cfg.analytic;
            if (a.form == "constant") {
                return std::make_unique<AnalyticCostMap>(
                    AnalyticCostMap::constant(cfg.d, a.value));
            }
            if (a.form == "linear") {
                return std::make_unique<AnalyticCostMap>(
                    AnalyticCostMap::linear(a.weights, a.bias));
            }
            return std::make_unique<AnalyticCostMap>(
                AnalyticCostMap::bumps(cfg.d, a.bumps, a.bias));
        }
    }
    throw std::logic_error("unreachable");
}

// --- shipped scenario layouts ------------------------------------------------

namespace detail {

// Five tangent loops of radius 0.15 hanging off the baseline y = 0, bulging
// upward, entered and left at the tangency point. Each loop is a 64-segment
// closed polygon, so the curve has 5 * 65 vertices.
inline Polyline five_loop_curve() {
    constexpr int kLoops = 5;
    constexpr int kSegments = 64;
    constexpr double kRadius = 0.15;
    constexpr double kPitch = 0.4;
    std::vector<Point2> v;
    v.reserve(kLoops * (kSegments + 1));
    for (int loop = 0; loop < kLoops; ++loop) {
        const double cx = kPitch * loop;
        for (int j = 0; j <= kSegments; ++j) {
            const double th = -M_PI / 2.0 + 2.0 * M_PI * double(j) / double(kSegments);
            v.push_back({cx + kRadius * std::cos(th), 0.15 + kRadius * std::sin(th)});
        }
    }
    return Polyline(std::move(v));
}

// The partner curve: same x profile, reflected so its loops bulge away, with
// baselines 0.04 apart. Mirroring preserves the arc-length parametrization.
inline Polyline mirror_below(const Polyline& c) {
    std::vector<Point2> v = c.vertices();
    for (Point2& p : v) p.y = -0.04 - p.y;
    return Polyline(std::move(v));
}

}  // namespace detail

// Two interleaved five-loop curves whose best monotone matching costs 0.34
// (wait at a tangency while the partner rounds its loop) and whose
// simultaneous traversal costs 0.64 (both mid-loop, bulging apart).
// d=3 duplicates the second curve, d=4 also duplicates the first.
inline ScenarioConfig build_p1(int d) {
    if (d < 2 || d > 4) throw std::invalid_argument("five-loop scenario supports d in {2,3,4}");
    const Polyline red = detail::five_loop_curve();
    const Polyline blue = detail::mirror_below(red);
    ScenarioConfig cfg;
    cfg.kind = ScenarioKind::frechet;
    cfg.d = d;
    cfg.curves = {red, blue};
    if (d >= 3) cfg.curves.push_back(blue);
    if (d >= 4) cfg.curves.push_back(red);
    cfg.notes =
        "layout: five circular loops of radius 0.15 per curve, 64-segment "
        "polygons, loop pitch 0.4, baselines vertically separated by 0.04, loops "
        "bulging away from the partner curve; matching anchors 0.34 / 0.64";
    return cfg;
}

// A leader on a straight corridor with two followers behind parallel walls;
// wall pairs alternate between the upper and lower follower so one follower
// can always hold line of sight while the other detours.
inline ScenarioConfig build_p2() {
    ScenarioConfig cfg;
    cfg.kind = ScenarioKind::leader;
    cfg.d = 3;
    cfg.curves = {
        Polyline({{0.0, 0.0}, {4.0, 0.0}}),
        Polyline({{0.0, 0.5},
                  {0.7, 0.5},
                  {0.7, 1.7},
                  {1.3, 1.7},
                  {1.3, 0.5},
                  {2.3, 0.5},
                  {2.3, 1.7},
                  {2.9, 1.7},
                  {2.9, 0.5},
                  {4.0, 0.5}}),
        Polyline({{0.0, -0.5},
                  {1.5, -0.5},
                  {1.5, -1.7},
                  {2.1, -1.7},
                  {2.1, -0.5},
                  {3.1, -0.5},
                  {3.1, -1.7},
                  {3.7, -1.7},
                  {3.7, -0.5},
                  {4.0, -0.5}}),
    };
    cfg.walls = {
        {{1.0, 0.25}, {1.0, 1.5}},
        {{2.6, 0.25}, {2.6, 1.5}},
        {{1.8, -0.25}, {1.8, -1.5}},
        {{3.4, -0.25}, {3.4, -1.5}},
    };
    cfg.notes =
        "layout: leader on y=0 from x=0 to 4; followers on y=+-0.5 with "
        "rectangular detours over their walls; upper walls at x=1.0,2.6 and lower "
        "walls at x=1.8,3.4 alternate so occlusions never overlap";
    return cfg;
}

// The same corridor with the leader boxed in so no sightline survives; every
// configuration then costs +inf and planning is infeasible by construction.
inline ScenarioConfig build_p2_walled() {
    ScenarioConfig cfg = build_p2();
    cfg.walls.push_back({{-0.1, 0.1}, {4.1, 0.1}});
    cfg.walls.push_back({{-0.1, -0.1}, {4.1, -0.1}});
    cfg.walls.push_back({{-0.1, -0.1}, {-0.1, 0.1}});
    cfg.walls.push_back({{4.1, -0.1}, {4.1, 0.1}});
    cfg.notes += "; leader route fully enclosed by a sightline-blocking box";
    return cfg;
}

// Seven straight routes crossing an intersection at staggered angles and
// perpendicular offsets, so no two routes meet at the same point and
// parameter simultaneously.
inline ScenarioConfig build_p3() {
    constexpr int kAgents = 7;
    constexpr double kHalfLen = 1.5;
    constexpr double kOffsetStep = 0.08;
    ScenarioConfig cfg;
    cfg.kind = ScenarioKind::safest;
    cfg.d = kAgents;
    for (int i = 0; i < kAgents; ++i) {
        const double alpha = M_PI * double(i) / double(kAgents);
        const double dx = std::cos(alpha), dy = std::sin(alpha);
        const double off = kOffsetStep * double(i - 3);
        const Point2 a{-kHalfLen * dx - off * dy, -kHalfLen * dy + off * dx};
        const Point2 b{kHalfLen * dx - off * dy, kHalfLen * dy + off * dx};
        cfg.curves.emplace_back(std::vector<Point2>{a, b});
    }
    cfg.notes =
        "layout: 7 straight chords through an intersection, direction "
        "angles pi*i/7, perpendicular offsets 0.08*(i-3), half-length 1.5";
    return cfg;
}

// --- scenario documents ------------------------------------------------------

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) {
        throw std::runtime_error(std::string("scenario parse error: missing field '") +
                                 name + "'");
    }
    return j.at(name);
}

}  // namespace detail

inline std::string save_scenario(const ScenarioConfig& cfg) {
    nlohmann::json j;
    j["kind"] = to_string(cfg.kind);
    j["d"] = cfg.d;
    auto& curves = j["curves"] = nlohmann::json::array();
    for (const Polyline& c : cfg.curves) {
        nlohmann::json jc = nlohmann::json::array();
        for (const Point2& p : c.vertices()) jc.push_back({p.x, p.y});
        curves.push_back(std::move(jc));
    }
    auto& walls = j["walls"] = nlohmann::json::array();
    for (const Segment& w : cfg.walls) {
        walls.push_back({{w.a.x, w.a.y}, {w.b.x, w.b.y}});
    }
    j["notes"] = cfg.notes;
    if (cfg.analytic) {
        nlohmann::json ja;
        ja["form"] = cfg.analytic->form;
        if (cfg.analytic->form == "constant") {
            ja["value"] = cfg.analytic->value;
        } else if (cfg.analytic->form == "linear") {
            ja["weights"] = cfg.analytic->weights;
            ja["bias"] = cfg.analytic->bias;
        } else {
            ja["bias"] = cfg.analytic->bias;
            ja["bumps"] = nlohmann::json::array();
            for (const auto& b : cfg.analytic->bumps) {
                ja["bumps"].push_back(
                    {{"center", b.center}, {"amplitude", b.amplitude}, {"width", b.width}});
            }
        }
        j["analytic"] = std::move(ja);
    }
    return j.dump(2) + "\n";
}

inline ScenarioConfig load_scenario(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("scenario parse error: ") + e.what());
    }
    ScenarioConfig cfg;
    try {
        cfg.kind = kind_from_string(detail::require_field(j, "kind").get<std::string>());
        cfg.d = detail::require_field(j, "d").get<int>();
        const bool need_curves = cfg.kind != ScenarioKind::analytic;
        if (need_curves || j.contains("curves")) {
            for (const auto& jc : detail::require_field(j, "curves")) {
                std::vector<Point2> v;
                for (const auto& jp : jc) {
                    if (jp.size() != 2) {
                        throw std::runtime_error(
                            "scenario parse error: curve vertex is not an [x,y] pair");
                    }
                    v.push_back({jp.at(0).get<double>(), jp.at(1).get<double>()});
                }
                if (v.size() < 2) {
                    throw std::runtime_error(
                        "scenario parse error: field 'curves' contains a curve with "
                        "fewer than 2 vertices");
                }
                cfg.curves.emplace_back(std::move(v));
            }
        }
        if (j.contains("walls")) {
            for (const auto& jw : j.at("walls")) {
                if (jw.size() != 2 || jw.at(0).size() != 2 || jw.at(1).size() != 2) {
                    throw std::runtime_error(
                        "scenario parse error: wall is not a pair of [x,y] points");
                }
                cfg.walls.push_back({{jw.at(0).at(0).get<double>(), jw.at(0).at(1).get<double>()},
                                     {jw.at(1).at(0).get<double>(), jw.at(1).at(1).get<double>()}});
            }
        }
        if (j.contains("notes")) cfg.notes = j.at("notes").get<std::string>();
        if (j.contains("analytic")) {
            const auto& ja = j.at("analytic");
            AnalyticSpec spec;
            spec.form = detail::require_field(ja, "form").get<std::string>();
            if (spec.form == "constant") {
                spec.value = detail::require_field(ja, "value").get<double>();
            } else if (spec.form == "linear") {
                spec.weights = detail::require_field(ja, "weights").get<std::vector<double>>();
                spec.bias = detail::require_field(ja, "bias").get<double>();
            } else if (spec.form == "bumps") {
                spec.bias = detail::require_field(ja, "bias").get<double>();
                for (const auto& jb : detail::require_field(ja, "bumps")) {
                    AnalyticCostMap::Bump b;
                    b.center = detail::require_field(jb, "center").get<std::vector<double>>();
                    b.amplitude = detail::require_field(jb, "amplitude").get<double>();
                    b.width = detail::require_field(jb, "width").get<double>();
                    spec.bumps.push_back(std::move(b));
                }
            }
            cfg.analytic = std::move(spec);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("scenario parse error: ") + e.what());
    }
    validate(cfg);
    return cfg;
}

inline ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_scenario(ss.str());
}

inline void save_scenario_file(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path);
    out << save_scenario(cfg);
}

}  // namespace btt
