// Command-line front end: instance generation, one-shot solves, root-loop
// studies, polytope verification, and benchmark batteries.
//
// Exit codes: 0 ok, 2 instance parse error, 3 unusable configuration,
// 4 time limit hit on a solve.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqcol/bench.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/cuts.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/io.hpp"
#include "eqcol/lp.hpp"
#include "eqcol/polytope.hpp"
#include "eqcol/separation.hpp"
#include "eqcol/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitTimeLimit = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOpts {
    std::string file;
    std::string fixture;
    std::vector<std::int64_t> random; // n, density, seed
};

void add_input_options(CLI::App& cmd, InputOpts& in) {
    cmd.add_option("file", in.file, "DIMACS .col instance");
    cmd.add_option("--fixture", in.fixture,
                   "builtin instance: c5, k33, joined-cycle-tail, star-path");
    cmd.add_option("--random", in.random, "sampled instance: N DENSITY SEED")->expected(3);
}

eqcol::Graph fixture_by_name(const std::string& name) {
    if (name == "c5") return eqcol::fixtures::c5();
    if (name == "k33") return eqcol::fixtures::k33();
    if (name == "joined-cycle-tail") return eqcol::fixtures::joined_cycle_tail();
    if (name == "star-path") return eqcol::fixtures::star_path();
    throw ConfigError("unknown fixture: " + name);
}

std::pair<std::string, eqcol::Graph> load_input(const InputOpts& in) {
    int sources = (in.file.empty() ? 0 : 1) + (in.fixture.empty() ? 0 : 1) +
                  (in.random.empty() ? 0 : 1);
    if (sources != 1)
        throw ConfigError("give exactly one of FILE, --fixture, --random");
    if (!in.file.empty())
        return {in.file, eqcol::parse_dimacs_file(in.file)};
    if (!in.fixture.empty())
        return {in.fixture, fixture_by_name(in.fixture)};
    std::int64_t n = in.random[0], density = in.random[1], seed = in.random[2];
    if (n < 1)
        throw ConfigError("--random: N must be positive");
    if (density < 0 || density > 100)
        throw ConfigError("--random: DENSITY must lie in [0, 100]");
    eqcol::BenchInstance inst = eqcol::random_instance(
        static_cast<int>(n), static_cast<int>(density), static_cast<std::uint64_t>(seed));
    return {inst.id, inst.graph};
}

eqcol::Strategy strategy_from(const std::string& text) {
    std::optional<eqcol::Strategy> s = eqcol::parse_strategy(text);
    if (!s)
        throw ConfigError("unknown strategy: " + text + " (expected s1..s7)");
    return *s;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path);
    return out;
}

// --- gen -------------------------------------------------------------------

struct GenOpts {
    InputOpts in;
    std::string out;
};

int run_gen(const GenOpts& opt) {
    auto [id, g] = load_input(opt.in);
    if (opt.out.empty()) {
        eqcol::write_dimacs(g, std::cout);
    } else {
        std::ofstream out = open_output(opt.out);
        eqcol::write_dimacs(g, out);
        std::cerr << id << " -> " << opt.out << " (n=" << g.num_vertices()
                  << ", m=" << g.num_edges() << ")\n";
    }
    return kExitOk;
}

// --- solve -----------------------------------------------------------------

struct SolveOpts {
    InputOpts in;
    std::string strategy = "s4";
    double time_limit = 7200.0;
    std::int64_t node_cap = 100000000;
    std::string lp_command;
    std::string json_path;
};

int run_solve(const SolveOpts& opt) {
    auto [id, g] = load_input(opt.in);
    if (!opt.lp_command.empty()) {
        eqcol::LpEngineConfig cfg;
        cfg.kind = eqcol::LpEngineConfig::Kind::external_command;
        cfg.command = opt.lp_command;
        eqcol::set_default_lp_engine(cfg);
    }
    eqcol::SolveLimits limits;
    limits.time_limit_sec = opt.time_limit;
    limits.node_cap = opt.node_cap;
    eqcol::SolveReport rep = eqcol::cut_and_branch(g, strategy_from(opt.strategy), limits);

    bool optimal = rep.status == eqcol::SolveStatus::optimal;
    std::cout << "instance " << id << " n=" << g.num_vertices() << " m=" << g.num_edges()
              << "\n"
              << "bounds lb=" << rep.lb << " ub=" << rep.ub << "\n"
              << "root impr=" << rep.root.impr << " cuts=" << rep.root.total_cuts
              << " rounds=" << rep.root.rounds_run << "\n"
              << "status " << (optimal ? "optimal" : "time-limit") << "\n";
    if (optimal)
        std::cout << "chi_eq " << rep.chi_eq << "\n";
    if (rep.incumbent) {
        std::cout << "coloring";
        for (int v = 1; v <= g.num_vertices(); ++v)
            std::cout << ' ' << v << '=' << rep.incumbent->color(v);
        std::cout << "\n";
    }
    std::cout << "nodes " << rep.nodes << " time " << std::fixed << std::setprecision(3)
              << rep.seconds << "s\n"
              << std::defaultfloat;

    if (!opt.json_path.empty()) {
        nlohmann::json doc{{"instance", id},
                           {"n", g.num_vertices()},
                           {"m", g.num_edges()},
                           {"status", optimal ? "optimal" : "time-limit"},
                           {"chi_eq", rep.chi_eq},
                           {"lb", rep.lb},
                           {"ub", rep.ub},
                           {"nodes", rep.nodes},
                           {"seconds", rep.seconds},
                           {"root",
                            {{"impr", rep.root.impr},
                             {"total_cuts", rep.root.total_cuts},
                             {"rounds", rep.root.rounds_run},
                             {"lb_trajectory", rep.root.lb_trajectory}}}};
        if (rep.incumbent)
            doc["coloring"] = rep.incumbent->colors();
        open_output(opt.json_path) << doc.dump(2) << "\n";
    }
    return optimal ? kExitOk : kExitTimeLimit;
}

// --- cutloop ---------------------------------------------------------------

struct LoopOpts {
    InputOpts in;
    std::string strategy = "s4";
    int rounds = 30;
    std::string json_path;
};

int run_cutloop(const LoopOpts& opt) {
    auto [id, g] = load_input(opt.in);
    eqcol::BenchOptions bopt;
    bopt.strategies = {strategy_from(opt.strategy)};
    bopt.rounds = opt.rounds;
    bopt.threads = 1;
    std::vector<eqcol::BenchRow> rows = eqcol::run_benchmark({{id, g, 0}}, bopt);
    const eqcol::BenchRow& row = rows.front();
    if (!row.error.empty())
        throw std::runtime_error(row.error);

    std::cout << "instance " << id << " n=" << g.num_vertices() << " m=" << g.num_edges()
              << "\n";
    if (row.solved) {
        std::cout << "solved by the initialization bounds: chi_eq " << row.chi_eq << "\n";
        return kExitOk;
    }
    // The trajectory pads past an early stop; print executed rounds only.
    std::size_t shown = std::min(row.lb_trajectory.size(),
                                 static_cast<std::size_t>(row.rounds_run) + 1);
    for (std::size_t r = 0; r < shown; ++r)
        std::cout << "round " << r << " bound " << row.lb_trajectory[r] << "\n";
    std::cout << "impr " << row.impr << " cuts-to-best " << row.cuts_to_best << " total-cuts "
              << row.total_cuts << " time " << std::fixed << std::setprecision(3)
              << row.seconds << "s\n"
              << std::defaultfloat;

    if (!opt.json_path.empty()) {
        nlohmann::json doc{{"instance", id},
                           {"strategy", eqcol::strategy_name(row.strategy)},
                           {"impr", row.impr},
                           {"cuts_to_best", row.cuts_to_best},
                           {"total_cuts", row.total_cuts},
                           {"seconds", row.seconds},
                           {"lb_trajectory", row.lb_trajectory}};
        open_output(opt.json_path) << doc.dump(2) << "\n";
    }
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOpts {
    InputOpts in;
    std::int64_t effort = 0;
};

int run_verify(const VerifyOpts& opt) {
    auto [id, g] = load_input(opt.in);
    int n = g.num_vertices();
    if (n > 12)
        throw ConfigError("verify: instances above 12 vertices are out of reach");

    bool all_ok = true;
    try {
        std::cout << "hull dimension " << eqcol::ecp_dimension(g) << "\n";
        bool dim_ok = eqcol::verify_dimension(g);
        all_ok = all_ok && dim_ok;
        std::cout << "dimension check: " << (dim_ok ? "pass" : "FAIL") << "\n";
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("verify: ") + e.what());
    }

    std::vector<eqcol::CutRow> rows;
    rows.push_back(eqcol::nonneg_row(1, 1, n));
    for (int j = 3; j <= n - 2; ++j)
        rows.push_back(eqcol::block_cut(1, j, n));
    eqcol::VertexSet q = eqcol::maximal_clique(g);
    if (q.size() >= 2) {
        rows.push_back(eqcol::clique_cut(g, q, 1));
        rows.push_back(eqcol::clique_cut(g, q, 2));
    }
    for (const eqcol::CutRow& row : rows) {
        eqcol::FaceVerdict verdict = eqcol::verify_face(g, row, opt.effort);
        all_ok = all_ok && verdict.status != eqcol::FaceStatus::invalid;
        std::cout << eqcol::face_report(id, row, verdict) << "\n";
    }
    return all_ok ? kExitOk : kExitFail;
}

// --- bench -----------------------------------------------------------------

struct BenchCliOpts {
    std::vector<std::string> files;
    std::int64_t n = 30;
    std::vector<std::int64_t> densities = {30, 50, 70, 90};
    std::int64_t seeds = 10;
    std::vector<std::string> strategies = {"s1", "s4"};
    int rounds = 30;
    int threads = 0;
    bool branch = false;
    double time_limit = 7200.0;
    std::int64_t node_cap = 100000000;
    std::string csv_path;
    std::string json_path;
};

int run_bench(const BenchCliOpts& opt) {
    std::vector<eqcol::BenchInstance> battery;
    for (const std::string& path : opt.files)
        battery.push_back({path, eqcol::parse_dimacs_file(path), 0});
    if (opt.files.empty()) {
        if (opt.n < 1)
            throw ConfigError("--n must be positive");
        if (opt.seeds < 1)
            throw ConfigError("--seeds must be positive");
        for (std::int64_t d : opt.densities) {
            if (d < 0 || d > 100)
                throw ConfigError("--densities entries must lie in [0, 100]");
            for (std::int64_t seed = 1; seed <= opt.seeds; ++seed)
                battery.push_back(eqcol::random_instance(static_cast<int>(opt.n),
                                                         static_cast<int>(d),
                                                         static_cast<std::uint64_t>(seed)));
        }
    }

    eqcol::BenchOptions bopt;
    bopt.strategies.clear();
    for (const std::string& s : opt.strategies)
        bopt.strategies.push_back(strategy_from(s));
    if (bopt.strategies.empty())
        throw ConfigError("--strategies must name at least one strategy");
    bopt.rounds = opt.rounds;
    bopt.threads = opt.threads;
    bopt.branch = opt.branch;
    bopt.limits.time_limit_sec = opt.time_limit;
    bopt.limits.node_cap = opt.node_cap;

    std::vector<eqcol::BenchRow> rows = eqcol::run_benchmark(battery, bopt);
    if (opt.csv_path.empty()) {
        eqcol::write_bench_csv(rows, std::cout);
    } else {
        std::ofstream out = open_output(opt.csv_path);
        eqcol::write_bench_csv(rows, out);
        for (const eqcol::BenchMean& m : eqcol::density_means(rows))
            std::cout << "mean[d=" << m.density << ',' << eqcol::strategy_name(m.strategy)
                      << "] impr=" << m.impr << " cuts=" << m.cuts_to_best
                      << " time=" << m.time_to_best << "s over " << m.runs << " runs\n";
    }
    if (!opt.json_path.empty()) {
        std::ofstream out = open_output(opt.json_path);
        eqcol::write_bench_json(rows, out);
    }
    long failures = 0;
    for (const eqcol::BenchRow& r : rows)
        if (!r.error.empty())
            ++failures;
    if (failures > 0)
        std::cerr << failures << " of " << rows.size() << " runs failed; see the error column\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable coloring toolkit"};
    app.require_subcommand(1);

    GenOpts gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "write an instance as DIMACS");
    add_input_options(*gen, gen_opts.in);
    gen->add_option("-o,--out", gen_opts.out, "output path (default stdout)");

    SolveOpts solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "compute chi_eq by cut-and-branch");
    add_input_options(*solve, solve_opts.in);
    solve->add_option("--strategy", solve_opts.strategy, "separation ladder rung s1..s7");
    solve->add_option("--time-limit", solve_opts.time_limit, "seconds before giving up");
    solve->add_option("--node-cap", solve_opts.node_cap, "enumeration node budget");
    solve->add_option("--lp-command", solve_opts.lp_command,
                      "external LP engine, invoked as CMD problem.lp solution.sol");
    solve->add_option("--json", solve_opts.json_path, "write a JSON report here");

    LoopOpts loop_opts;
    CLI::App* cutloop = app.add_subcommand("cutloop", "root cutting-plane rounds only");
    add_input_options(*cutloop, loop_opts.in);
    cutloop->add_option("--strategy", loop_opts.strategy, "separation ladder rung s1..s7");
    cutloop->add_option("--rounds", loop_opts.rounds, "separation rounds")
        ->check(CLI::PositiveNumber);
    cutloop->add_option("--json", loop_opts.json_path, "write a JSON report here");

    VerifyOpts verify_opts;
    CLI::App* verify =
        app.add_subcommand("verify", "check hull dimension and facet claims on an instance");
    add_input_options(*verify, verify_opts.in);
    verify->add_option("--effort", verify_opts.effort,
                       "max face points to generate (0 picks 50 per dimension)");

    BenchCliOpts bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "strategy battery with CSV/JSON reports");
    bench->add_option("files", bench_opts.files, "DIMACS instances (default: sampled battery)");
    bench->add_option("--n", bench_opts.n, "sampled instance size");
    bench->add_option("--densities", bench_opts.densities, "density percents for the sampler");
    bench->add_option("--seeds", bench_opts.seeds, "sampler seeds 1..SEEDS per density");
    bench->add_option("--strategies", bench_opts.strategies, "ladder rungs to compare");
    bench->add_option("--rounds", bench_opts.rounds, "separation rounds per run")
        ->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_opts.threads, "worker threads (0 picks the hardware count)");
    bench->add_flag("--branch", bench_opts.branch, "run the full solve after the root loop");
    bench->add_option("--time-limit", bench_opts.time_limit, "per-run seconds under --branch");
    bench->add_option("--node-cap", bench_opts.node_cap, "per-run node budget under --branch");
    bench->add_option("--csv", bench_opts.csv_path, "CSV report path (default stdout)");
    bench->add_option("--json", bench_opts.json_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opts);
        if (solve->parsed()) return run_solve(solve_opts);
        if (cutloop->parsed()) return run_cutloop(loop_opts);
        if (verify->parsed()) return run_verify(verify_opts);
        if (bench->parsed()) return run_bench(bench_opts);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
