#include "eqcol/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "eqcol/bounds.hpp"
#include "eqcol/lp.hpp"

namespace eqcol {

namespace {

constexpr double kIntTol = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

CutLoopReport constant_report(double bound) {
    CutLoopReport rep;
    rep.lb_trajectory.assign(1, bound);
    return rep;
}

// Exact maximum matching by branching over pairings: the lowest undecided
// vertex either pairs with a free neighbor above it or stays single, with a
// matched-plus-half-the-free-vertices bound for pruning. Runs on the
// complement of a graph with a universal vertex, which stays small enough
// for this to finish instantly.
std::vector<std::pair<int, int>> max_matching(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<char> used(n + 1, 0);
    std::vector<std::pair<int, int>> best, cur;

    for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        for (int u : g.neighbors(v))
            if (u > v && !used[u]) {
                used[v] = used[u] = 1;
                best.emplace_back(v, u);
                break;
            }
    }
    std::fill(used.begin(), used.end(), 0);

    std::function<void(int)> rec = [&](int v) {
        while (v <= n && used[v]) ++v;
        if (v > n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        int free_cnt = 0;
        for (int w = v; w <= n; ++w) free_cnt += used[w] ? 0 : 1;
        if (cur.size() + static_cast<std::size_t>(free_cnt / 2) <= best.size()) return;
        for (int u : g.neighbors(v)) {
            if (u < v || used[u]) continue;
            used[v] = used[u] = 1;
            cur.emplace_back(v, u);
            rec(v + 1);
            cur.pop_back();
            used[v] = used[u] = 0;
        }
        used[v] = 1;
        rec(v + 1);
        used[v] = 0;
    };
    rec(1);
    return best;
}

// chi_eq and a witness for a graph with a universal vertex: every class has
// at most two vertices and the size-two classes form a matching in the
// complement, so the optimum pairs up a maximum matching there.
std::pair<int, EqColoring> solve_with_universal_vertex(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::pair<int, int>> match = max_matching(complement(g));
    int k = n - static_cast<int>(match.size());
    std::vector<int> colors(n, 0);
    int next = 0;
    for (auto [u, v] : match) {
        ++next;
        colors[u - 1] = colors[v - 1] = next;
    }
    for (int v = 1; v <= n; ++v)
        if (colors[v - 1] == 0) colors[v - 1] = ++next;
    return {k, EqColoring(std::move(colors), k)};
}

} // namespace

int ceil_bound(double v) { return static_cast<int>(std::ceil(v - 1e-6)); }

CutLoopReport cutting_plane(const Graph& g, ModelSpec& model, Strategy strategy, int rounds) {
    auto t0 = Clock::now();
    CutLoopReport rep;
    LpSolver lp(model);
    {
        auto [k, start] = naive_upper_bound(g);
        if (k <= model.ub) lp.set_start_coloring(start.colors(), k);
    }
    LPOutcome out = lp.solve();
    if (out.status != LpStatus::optimal)
        throw std::runtime_error("cutting_plane: root relaxation did not solve");

    rep.lb_trajectory.push_back(out.objective);
    std::vector<double> at_sec{seconds_since(t0)};
    std::vector<long> at_cuts{0};

    SeparationContext ctx = make_separation_context(g, model.lb, model.ub);
    for (int round = 1; round <= rounds; ++round) {
        std::vector<CutRow> found = run_strategy(strategy, ctx, out.point);
        std::vector<LinRow> rows;
        rows.reserve(found.size());
        for (const CutRow& cut : found) rows.push_back(cut.project(model));
        for (LinRow& row : lazy_violations(model, out.point)) rows.push_back(std::move(row));
        if (rows.empty()) break;

        for (const CutRow& cut : found)
            rep.cuts.push_back({cut, cut.violation(out.point), round});
        for (const LinRow& row : rows) model.rows.push_back(row);

        out = lp.resolve_with_rows(rows);
        if (out.status != LpStatus::optimal)
            throw std::runtime_error("cutting_plane: relaxation lost feasibility");
        // Rows only shrink the feasible set, so the previous bound stays
        // valid; the max guards against simplex tolerance jitter.
        rep.lb_trajectory.push_back(std::max(out.objective, rep.lb_trajectory.back()));
        at_sec.push_back(seconds_since(t0));
        at_cuts.push_back(static_cast<long>(rep.cuts.size()));
        rep.rounds_run = round;
    }
    while (static_cast<int>(rep.lb_trajectory.size()) < rounds + 1) {
        rep.lb_trajectory.push_back(rep.lb_trajectory.back());
        at_sec.push_back(at_sec.back());
        at_cuts.push_back(at_cuts.back());
    }

    rep.total_cuts = static_cast<long>(rep.cuts.size());
    rep.impr = ceil_bound(rep.lb_trajectory.back()) - ceil_bound(rep.lb_trajectory.front());
    int target = ceil_bound(rep.lb_trajectory.back());
    std::size_t first = 0;
    while (ceil_bound(rep.lb_trajectory[first]) != target) ++first;
    rep.time_to_best = at_sec[first];
    rep.cuts_to_best = at_cuts[first];
    return rep;
}

SolveReport branch_and_bound(const Graph& g, const ModelSpec& model,
                             const EqColoring& incumbent, const SolveLimits& limits) {
    (void)g;
    auto t0 = Clock::now();
    SolveReport rep;
    rep.lb = model.lb;
    rep.ub = model.ub;
    rep.incumbent = incumbent;
    int inc_val = incumbent.num_colors();

    LpSolver lp(model);
    if (inc_val <= model.ub) lp.set_start_coloring(incumbent.colors(), inc_val);

    const int n = model.n;
    const int ub = model.ub;
    long nodes = 0;
    bool hit_limit = false;

    std::function<void()> dfs = [&]() {
        if (hit_limit) return;
        if (nodes >= limits.node_cap || seconds_since(t0) > limits.time_limit_sec) {
            hit_limit = true;
            return;
        }
        ++nodes;
        LPOutcome out = lp.solve();
        for (;;) {
            if (out.status == LpStatus::infeasible) return;
            if (out.status != LpStatus::optimal) {
                hit_limit = true;
                return;
            }
            if (ceil_bound(out.objective) >= inc_val) return;

            int bv = 0, bj = 0;
            double score = kIntTol;
            for (int v = 1; v <= n; ++v)
                for (int j = 1; j <= ub; ++j) {
                    double val = out.point.x_of(v, j);
                    double s = std::min(val, 1.0 - val);
                    if (s > score) {
                        score = s;
                        bv = v;
                        bj = j;
                    }
                }

            int branch_col = -1;
            if (bv != 0) {
                branch_col = model.vars.x(bv, bj);
            } else {
                std::vector<LinRow> lazy = lazy_violations(model, out.point);
                if (!lazy.empty()) {
                    out = lp.resolve_with_rows(lazy);
                    continue;
                }
                int bw = 0;
                double wscore = kIntTol;
                for (int j = 1; j <= ub; ++j) {
                    double val = out.point.w_of(j);
                    double s = std::min(val, 1.0 - val);
                    if (s > wscore) {
                        wscore = s;
                        bw = j;
                    }
                }
                if (bw == 0) {
                    std::vector<int> colors(n, 0);
                    for (int v = 1; v <= n; ++v)
                        for (int j = 1; j <= ub; ++j)
                            if (out.point.x_of(v, j) > 0.5) colors[v - 1] = j;
                    int k = 0;
                    for (int j = 1; j <= ub; ++j) k += out.point.w_of(j) > 0.5 ? 1 : 0;
                    EqColoring cand(std::move(colors), k);
                    if (k < inc_val) {
                        inc_val = k;
                        rep.incumbent = std::move(cand);
                    }
                    return;
                }
                branch_col = model.vars.w(bw);
            }

            lp.set_column_bounds(branch_col, 0.0, 0.0);
            dfs();
            lp.set_column_bounds(branch_col, 1.0, 1.0);
            if (!hit_limit) dfs();
            lp.set_column_bounds(branch_col, model.bounds[branch_col].lo,
                                 model.bounds[branch_col].hi);
            return;
        }
    };
    dfs();

    rep.nodes = nodes;
    rep.seconds = seconds_since(t0);
    rep.status = hit_limit ? SolveStatus::time_limit : SolveStatus::optimal;
    rep.chi_eq = inc_val;
    return rep;
}

SolveReport cut_and_branch(const Graph& g, Strategy strategy, const SolveLimits& limits) {
    auto t0 = Clock::now();
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("solve: graph has no vertices");

    SolveReport rep;
    rep.status = SolveStatus::optimal;
    rep.nodes = 0;

    if (g.num_edges() == 0) {
        rep.chi_eq = 1;
        rep.incumbent = EqColoring(std::vector<int>(n, 1), 1);
    } else if (n < 5) {
        OracleResult o = oracle(g);
        rep.chi_eq = o.chi_eq;
        rep.incumbent = o.witness.at(o.chi_eq);
    } else if (g.universal_vertex()) {
        auto [k, witness] = solve_with_universal_vertex(g);
        rep.chi_eq = k;
        rep.incumbent = std::move(witness);
    } else if (!g.isolated_vertices().empty() &&
               g.num_edges() == (n - 1) * (n - 2) / 2) {
        // A complete graph plus one isolated vertex: the clique needs n - 1
        // colors and the extra vertex shares one of them.
        int iso = g.isolated_vertices().front();
        std::vector<int> colors(n, 0);
        int next = 0;
        for (int v = 1; v <= n; ++v)
            if (v != iso) colors[v - 1] = ++next;
        colors[iso - 1] = 1;
        rep.chi_eq = n - 1;
        rep.incumbent = EqColoring(std::move(colors), n - 1);
    } else {
        std::vector<int> label = label_vertices(g);
        Graph gl = g.relabeled(label);
        int lb = lower_bound(gl);
        auto [ub, naive] = naive_upper_bound(gl);
        rep.lb = lb;
        rep.ub = ub;
        rep.labeling = label;

        auto unmap = [&](const EqColoring& c) {
            std::vector<int> colors(n, 0);
            for (int v = 1; v <= n; ++v) colors[v - 1] = c.color(label[v - 1]);
            return EqColoring(std::move(colors), c.num_colors());
        };

        if (lb >= ub) {
            rep.chi_eq = ub;
            rep.incumbent = unmap(naive);
            rep.root = constant_report(static_cast<double>(ub));
        } else {
            ModelSpec model = build_formulation(gl, lb, ub);
            rep.root = cutting_plane(gl, model, strategy);
            SolveLimits rest = limits;
            rest.time_limit_sec = std::max(0.0, limits.time_limit_sec - seconds_since(t0));
            SolveReport tail = branch_and_bound(gl, model, naive, rest);
            rep.status = tail.status;
            rep.chi_eq = tail.chi_eq;
            rep.nodes = tail.nodes;
            rep.incumbent = unmap(*tail.incumbent);
        }
        rep.seconds = seconds_since(t0);
        return rep;
    }

    rep.lb = rep.chi_eq;
    rep.ub = rep.chi_eq;
    rep.root = constant_report(static_cast<double>(rep.chi_eq));
    rep.seconds = seconds_since(t0);
    return rep;
}

} // namespace eqcol
