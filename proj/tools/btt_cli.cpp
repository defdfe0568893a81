// Command-line front end: plan a scenario instance (`run`), sweep sample
// counts for convergence tables (`sweep`), or invoke the brute-force
// references (`oracle`). Emits CSV records and, for `run`, the plan itself.
//
// Exit codes: 0 solved, 1 unsolved, 2 usage/validation/runtime error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btt/btt.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitUnsolved = 1;
constexpr int kExitError = 2;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
    return buf;
}

const char* kCsvHeader =
    "scenario,n,seed,eta,h,solved,cost,wall_time_s,nodes_expanded,"
    "edges_considered,monotone_edges_accepted,costmap_evals,row,unsolved\n";

struct RowOpts {
    std::string scenario;
    long long n = 0;
    long long seed = 0;
    double eta = 1.0;
    double h = 0.01;
    bool no_timing = false;
};

std::string record_row(const RowOpts& o, bool solved, std::optional<double> cost,
                       const btt::RunStats& st, const std::string& row_kind) {
    std::string r;
    r += o.scenario + ",";
    r += std::to_string(o.n) + ",";
    r += std::to_string(o.seed) + ",";
    r += fmt(o.eta) + ",";
    r += fmt(o.h) + ",";
    r += (solved ? "1" : "0");
    r += ",";
    r += cost ? fmt(*cost) : std::string("none");
    r += ",";
    r += fmt(o.no_timing ? 0.0 : st.wall_time_s) + ",";
    r += fmt(st.nodes_expanded) + ",";
    r += fmt(st.edges_considered) + ",";
    r += fmt(st.monotone_edges_accepted) + ",";
    r += fmt(st.costmap_evals) + ",";
    r += row_kind + ",";
    r += solved ? "0" : "1";
    r += "\n";
    return r;
}

std::string scenario_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

void write_path_file(const btt::PlanPath& path, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write path file: " + out_path);
    for (const auto& v : path.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << fmt(v[i]);
        }
        out << "\n";
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text;
}

struct CommonArgs {
    std::string scenario_path;
    long long n = 1000;
    long long seed = 0;
    double eta = 1.0;
    double h = 0.01;
    std::string out;
    std::optional<double> radius;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_n) {
    // --h (edge resolution) needs the single-letter help alias out of the way.
    cmd->set_help_flag("--help", "print this help and exit");
    cmd->add_option("--scenario", a.scenario_path, "scenario file (JSON)")->required();
    if (with_n) cmd->add_option("--n", a.n, "sample count");
    cmd->add_option("--seed", a.seed, "sampling seed");
    cmd->add_option("--eta", a.eta, "radius slack factor")->default_val(1.0);
    cmd->add_option("--h", a.h, "edge-sampling resolution")->default_val(0.01);
    cmd->add_option("--out", a.out, "output file");
    cmd->add_option("--radius", a.radius, "override the connection radius")->group("");
    cmd->add_flag("--no-timing", a.no_timing, "report wall_time_s as 0")->group("");
}

btt::GraphParams make_params(const CommonArgs& a, int d) {
    btt::GraphParams p;
    p.n = int(a.n);
    p.d = d;
    p.eta = a.eta;
    p.seed = std::uint64_t(a.seed);
    p.h = a.h;
    p.radius_override = a.radius;
    return p;
}

int cmd_run(const CommonArgs& a) {
    const btt::ScenarioConfig cfg = btt::load_scenario_file(a.scenario_path);
    const auto map = btt::make_cost_map(cfg);
    const btt::GraphParams params = make_params(a, cfg.d);
    const btt::PlanResult res = btt::btt_plan(*map, params);

    const RowOpts row{scenario_name(a.scenario_path), a.n, a.seed, a.eta, a.h, a.no_timing};
    std::string text = kCsvHeader;
    text += record_row(row, res.path.has_value(),
                       res.path ? std::optional<double>(res.path->cost) : std::nullopt,
                       res.stats, "run");
    std::cout << text;

    if (res.path) {
        write_path_file(*res.path, a.out.empty() ? "btt_path.txt" : a.out);
        return kExitSolved;
    }
    return kExitUnsolved;
}

int cmd_sweep(const CommonArgs& a, const std::vector<long long>& n_list, int reps) {
    if (n_list.empty()) throw std::runtime_error("sweep needs a non-empty --n-list");
    if (reps < 1) throw std::runtime_error("sweep needs --reps >= 1");
    const btt::ScenarioConfig cfg = btt::load_scenario_file(a.scenario_path);
    const auto map = btt::make_cost_map(cfg);
    const std::string name = scenario_name(a.scenario_path);

    std::string text = kCsvHeader;
    for (const long long n : n_list) {
        int solved_count = 0;
        double cost_sum = 0.0, time_sum = 0.0;
        btt::RunStats stat_sums;
        for (int rep = 0; rep < reps; ++rep) {
            CommonArgs one = a;
            one.n = n;
            one.seed = a.seed + rep;
            const btt::PlanResult res = btt::btt_plan(*map, make_params(one, cfg.d));
            const RowOpts row{name, n, one.seed, a.eta, a.h, a.no_timing};
            text += record_row(row, res.path.has_value(),
                               res.path ? std::optional<double>(res.path->cost)
                                        : std::nullopt,
                               res.stats, "run");
            if (res.path) {
                ++solved_count;
                cost_sum += res.path->cost;
            }
            time_sum += res.stats.wall_time_s;
            stat_sums.nodes_expanded += res.stats.nodes_expanded;
            stat_sums.edges_considered += res.stats.edges_considered;
            stat_sums.monotone_edges_accepted += res.stats.monotone_edges_accepted;
            stat_sums.costmap_evals += res.stats.costmap_evals;
        }
        // Per-n aggregate: unsolved runs contribute no cost to the mean.
        std::string agg;
        agg += name + "," + std::to_string(n) + "," + std::to_string(a.seed) + ",";
        agg += fmt(a.eta) + "," + fmt(a.h) + ",";
        agg += std::to_string(solved_count) + ",";
        agg += solved_count ? fmt(cost_sum / solved_count) : std::string("none");
        agg += ",";
        agg += fmt(a.no_timing ? 0.0 : time_sum / reps) + ",";
        agg += fmt(double(stat_sums.nodes_expanded) / reps) + ",";
        agg += fmt(double(stat_sums.edges_considered) / reps) + ",";
        agg += fmt(double(stat_sums.monotone_edges_accepted) / reps) + ",";
        agg += fmt(double(stat_sums.costmap_evals) / reps) + ",";
        agg += "mean," + std::to_string(reps - solved_count) + "\n";
        text += agg;
    }
    emit(text, a.out);
    return kExitSolved;
}

int cmd_oracle(const CommonArgs& a, const std::string& mode, int k) {
    const btt::ScenarioConfig cfg = btt::load_scenario_file(a.scenario_path);
    const std::string name = scenario_name(a.scenario_path);

    if (mode == "explicit") {
        if (a.n > 2000) {
            throw std::runtime_error("explicit oracle is limited to --n <= 2000");
        }
        const auto map = btt::make_cost_map(cfg);
        const btt::GraphParams params = make_params(a, cfg.d);
        const btt::SampleSet samples = btt::sample(params.n, params.d, params.seed);
        btt::RunStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        const auto path = btt::explicit_bottleneck_dijkstra(*map, samples, params.radius(),
                                                            params.h, &stats);
        stats.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const RowOpts row{name, a.n, a.seed, a.eta, a.h, a.no_timing};
        std::string text = kCsvHeader;
        text += record_row(row, path.has_value(),
                           path ? std::optional<double>(path->cost) : std::nullopt, stats,
                           "oracle");
        emit(text, a.out);
        return path ? kExitSolved : kExitUnsolved;
    }

    if (mode == "grid") {
        if (cfg.kind != btt::ScenarioKind::frechet || cfg.d != 2) {
            throw std::runtime_error("grid oracle needs a d=2 frechet scenario");
        }
        if (k < 2) throw std::runtime_error("grid oracle needs --k >= 2");
        const auto t0 = std::chrono::steady_clock::now();
        const double value = btt::grid_frechet_bottleneck(cfg.curves[0], cfg.curves[1], k);
        btt::RunStats stats;
        stats.costmap_evals = std::uint64_t(k) * std::uint64_t(k);
        stats.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        // The grid size k is the oracle's resolution knob; it is reported in
        // the n column.
        const RowOpts row{name, k, a.seed, a.eta, a.h, a.no_timing};
        std::string text = kCsvHeader;
        text += record_row(row, true, value, stats, "oracle");
        emit(text, a.out);
        return kExitSolved;
    }

    throw std::runtime_error("unknown oracle mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bottleneck coordination planner over monotone sample graphs"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run = app.add_subcommand("run", "plan one scenario instance");
    add_common(run, run_args, true);

    CommonArgs sweep_args;
    std::vector<long long> n_list;
    int reps = 10;
    CLI::App* sweep = app.add_subcommand("sweep", "repeated runs over a list of n");
    add_common(sweep, sweep_args, false);
    sweep->add_option("--n-list", n_list, "comma-separated sample counts")
        ->required()
        ->delimiter(',');
    sweep->add_option("--reps", reps, "repetitions per n")->default_val(10);

    CommonArgs oracle_args;
    std::string mode;
    int k = 801;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference values");
    add_common(oracle, oracle_args, true);
    oracle->add_option("--mode", mode, "explicit | grid")->required();
    oracle->add_option("--k", k, "grid points per axis (grid mode)")->default_val(801);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args, n_list, reps);
        return cmd_oracle(oracle_args, mode, k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
