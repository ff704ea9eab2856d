#include "eqcol/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "eqcol/bounds.hpp"
#include "eqcol/io.hpp"
#include "eqcol/model.hpp"

namespace eqcol {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void fill_from_root(BenchRow& row, const CutLoopReport& root) {
    row.impr = root.impr;
    row.rounds_run = root.rounds_run;
    row.time_to_best = root.time_to_best;
    row.cuts_to_best = root.cuts_to_best;
    row.total_cuts = root.total_cuts;
    row.lb_trajectory = root.lb_trajectory;
}

BenchRow run_one(const BenchInstance& inst, Strategy strategy, const BenchOptions& opt) {
    BenchRow row;
    row.instance = inst.id;
    row.n = inst.graph.num_vertices();
    row.density = inst.density;
    row.strategy = strategy;

    auto t0 = Clock::now();
    try {
        if (opt.branch) {
            SolveReport rep = cut_and_branch(inst.graph, strategy, opt.limits);
            fill_from_root(row, rep.root);
            row.solved = rep.status == SolveStatus::optimal;
            if (row.solved)
                row.chi_eq = rep.chi_eq;
            row.nodes = rep.nodes;
        } else {
            // Root relaxation only; when the initialization bounds already
            // meet there is nothing to relax and the run counts as solved.
            std::vector<int> label = label_vertices(inst.graph);
            Graph gl = inst.graph.relabeled(label);
            int lb = lower_bound(gl);
            int ub = naive_upper_bound(gl).first;
            if (lb >= ub) {
                row.solved = true;
                row.chi_eq = ub;
                row.lb_trajectory.assign(1, static_cast<double>(ub));
            } else {
                ModelSpec model = build_formulation(gl, lb, ub);
                fill_from_root(row, cutting_plane(gl, model, strategy, opt.rounds));
            }
        }
    } catch (const std::exception& e) {
        BenchRow failed;
        failed.instance = row.instance;
        failed.n = row.n;
        failed.density = row.density;
        failed.strategy = row.strategy;
        failed.error = e.what();
        row = std::move(failed);
    }
    row.seconds = seconds_since(t0);
    return row;
}

} // namespace

BenchInstance random_instance(int n, int density_percent, std::uint64_t seed) {
    BenchInstance inst;
    inst.id = "n" + std::to_string(n) + "_d" + std::to_string(density_percent) + "_s" +
              std::to_string(seed);
    inst.graph = random_graph(n, density_percent, seed);
    inst.density = density_percent;
    return inst;
}

std::vector<BenchRow> run_benchmark(const std::vector<BenchInstance>& battery,
                                    const BenchOptions& opt) {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t i = 0; i < battery.size(); ++i)
        for (std::size_t s = 0; s < opt.strategies.size(); ++s)
            jobs.emplace_back(i, s);

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();)
            rows[k] = run_one(battery[jobs[k].first], opt.strategies[jobs[k].second], opt);
    };

    std::size_t workers = opt.threads > 0 ? static_cast<std::size_t>(opt.threads)
                                          : std::thread::hardware_concurrency();
    workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (std::thread& th : pool)
            th.join();
    }
    return rows;
}

std::vector<BenchMean> density_means(const std::vector<BenchRow>& rows) {
    std::vector<BenchMean> means;
    auto slot = [&](int density, Strategy s) -> BenchMean& {
        for (BenchMean& m : means)
            if (m.density == density && m.strategy == s)
                return m;
        BenchMean fresh;
        fresh.density = density;
        fresh.strategy = s;
        means.push_back(fresh);
        return means.back();
    };
    for (const BenchRow& r : rows) {
        if (!r.error.empty())
            continue;
        BenchMean& m = slot(r.density, r.strategy);
        ++m.runs;
        m.impr += r.impr;
        m.time_to_best += r.time_to_best;
        m.cuts_to_best += static_cast<double>(r.cuts_to_best);
        m.nodes += static_cast<double>(r.nodes);
        m.seconds += r.seconds;
        m.solved_fraction += r.solved ? 1.0 : 0.0;
    }
    for (BenchMean& m : means)
        if (m.runs > 0) {
            m.impr /= m.runs;
            m.time_to_best /= m.runs;
            m.cuts_to_best /= m.runs;
            m.nodes /= m.runs;
            m.seconds /= m.runs;
            m.solved_fraction /= m.runs;
        }
    return means;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "instance,n,density,strategy,impr,time,cuts,solved,nodes,total_time,error\n";
    for (const BenchRow& r : rows)
        out << r.instance << ',' << r.n << ',' << r.density << ',' << strategy_name(r.strategy)
            << ',' << r.impr << ',' << fixed3(r.time_to_best) << ',' << r.cuts_to_best << ','
            << (r.solved ? 1 : 0) << ',' << r.nodes << ',' << fixed3(r.seconds) << ','
            << r.error << '\n';
    for (const BenchMean& m : density_means(rows))
        out << "mean[d=" << m.density << ';' << strategy_name(m.strategy) << "],," << m.density
            << ',' << strategy_name(m.strategy) << ',' << fixed3(m.impr) << ','
            << fixed3(m.time_to_best) << ',' << fixed3(m.cuts_to_best) << ','
            << fixed3(m.solved_fraction) << ',' << fixed3(m.nodes) << ',' << fixed3(m.seconds)
            << ",\n";
}

void write_bench_json(const std::vector<BenchRow>& rows, std::ostream& out) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const BenchRow& r : rows) {
        nlohmann::json o{{"instance", r.instance},
                         {"n", r.n},
                         {"density", r.density},
                         {"strategy", strategy_name(r.strategy)},
                         {"impr", r.impr},
                         {"rounds", r.rounds_run},
                         {"time", r.time_to_best},
                         {"cuts", r.cuts_to_best},
                         {"total_cuts", r.total_cuts},
                         {"solved", r.solved},
                         {"chi_eq", r.chi_eq},
                         {"nodes", r.nodes},
                         {"total_time", r.seconds},
                         {"lb_trajectory", r.lb_trajectory}};
        if (!r.error.empty())
            o["error"] = r.error;
        doc["rows"].push_back(std::move(o));
    }
    doc["means"] = nlohmann::json::array();
    for (const BenchMean& m : density_means(rows))
        doc["means"].push_back({{"density", m.density},
                                {"strategy", strategy_name(m.strategy)},
                                {"runs", m.runs},
                                {"impr", m.impr},
                                {"time", m.time_to_best},
                                {"cuts", m.cuts_to_best},
                                {"nodes", m.nodes},
                                {"total_time", m.seconds},
                                {"solved_fraction", m.solved_fraction}});
    out << doc.dump(2) << '\n';
}

} // namespace eqcol
