#include "eqcol/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace eqcol {

namespace {

constexpr double kIntTol = 1e-6;
constexpr int kFamilyCap = 50;
constexpr int kRoundCap = 200;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool is_fractional(double v) { return std::abs(v - std::round(v)) > kIntTol; }

} // namespace

bool SeparationContext::pool_contains(const VertexSet& q) const {
    return std::find(clique_pool.begin(), clique_pool.end(), q) != clique_pool.end();
}

SeparationContext make_separation_context(const Graph& g, int chi_lb, int chi_ub) {
    SeparationContext ctx;
    ctx.graph = &g;
    ctx.chi_lb = std::max(chi_lb, 1);
    ctx.chi_ub = chi_ub;
    int n = g.num_vertices();
    ctx.alpha_lo.assign(n + 1, 0);
    ctx.alpha_hi.assign(n + 1, 0);
    for (int u = 1; u <= n; ++u) {
        auto [lo, hi] = stability_bounds(g, g.neighbors(u));
        ctx.alpha_lo[u] = lo;
        ctx.alpha_hi[u] = hi;
    }
    return ctx;
}

const char* strategy_name(Strategy s) {
    static const char* names[] = {"S1", "S2", "S3", "S4", "S5", "S6", "S7"};
    return names[static_cast<int>(s)];
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    if (text.size() == 2 && (text[0] == 'S' || text[0] == 's') && text[1] >= '1' &&
        text[1] <= '7')
        return static_cast<Strategy>(text[1] - '1');
    return std::nullopt;
}

std::vector<CutFamily> strategy_families(Strategy s) {
    static const CutFamily ladder[] = {
        CutFamily::clique,        CutFamily::two_rank,
        CutFamily::block,         CutFamily::s_color,
        CutFamily::subneighborhood, CutFamily::outside_neighborhood,
        CutFamily::clique_neighborhood};
    int count = static_cast<int>(s) + 1;
    return {ladder, ladder + count};
}

std::vector<CutRow> separate_cliques(SeparationContext& ctx, const FracPoint& p) {
    const Graph& g = *ctx.graph;
    int n = g.num_vertices();
    std::vector<CutRow> out;
    for (int j = 1; j <= ctx.chi_ub; ++j) {
        // Heaviest adjacent pair; ties go to the lowest vertex indices.
        int bu = 0, bv = 0;
        double best = -1.0;
        for (const auto& [u, v] : g.edges()) {
            double wgt = p.x_of(u, j) + p.x_of(v, j);
            if (wgt > best + 1e-12) {
                best = wgt;
                bu = u;
                bv = v;
            }
        }
        if (bu == 0) break;
        VertexSet clique = {bu, bv};
        auto common = [&](int v) {
            if (std::find(clique.begin(), clique.end(), v) != clique.end()) return false;
            for (int m : clique)
                if (!g.adjacent(v, m)) return false;
            return true;
        };
        // Grow by x*-weight while a positive candidate exists.
        for (;;) {
            int pick = 0;
            double wgt = 0.0;
            for (int v = 1; v <= n; ++v)
                if (common(v) && p.x_of(v, j) > wgt + 1e-12) {
                    wgt = p.x_of(v, j);
                    pick = v;
                }
            if (pick == 0) break;
            clique.push_back(pick);
        }
        // Extend to maximality ignoring weight.
        for (int v = 1; v <= n; ++v)
            if (common(v)) clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        if (!ctx.pool_contains(clique)) ctx.clique_pool.push_back(clique);
        double weight = 0.0;
        for (int v : clique) weight += p.x_of(v, j);
        if (weight > p.w_of(j) + ctx.tol) out.push_back(clique_cut(g, clique, j));
    }
    return out;
}

std::vector<CutRow> separate_blocks(const SeparationContext& ctx, const FracPoint& p) {
    int n = ctx.graph->num_vertices();
    std::vector<CutRow> out;
    for (int v = 1; v <= n; ++v) {
        double tail = 0.0;
        for (int k = ctx.chi_ub; k >= 2; --k) {
            tail += p.x_of(v, k);
            if (tail > p.w_of(k) + ctx.tol) out.push_back(block_cut(v, k, n));
        }
    }
    return out;
}

std::vector<CutRow> separate_two_rank(const SeparationContext& ctx, const FracPoint& p) {
    const Graph& g = *ctx.graph;
    int n = g.num_vertices();
    std::vector<CutRow> out;
    std::vector<char> forbidden(n + 1, 0);
    for (int j = 1; j <= ctx.chi_ub; ++j) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        int open = n;
        while (open > 5) {
            // Heaviest non-adjacent pair of weight below one.
            int bu = 0, bv = 0;
            double best = -1.0;
            for (int u = 1; u < n; ++u) {
                if (forbidden[u]) continue;
                for (int v = u + 1; v <= n; ++v) {
                    if (forbidden[v] || g.adjacent(u, v)) continue;
                    double wgt = p.x_of(u, j) + p.x_of(v, j);
                    if (wgt < 1.0 && wgt > best + 1e-12) {
                        best = wgt;
                        bu = u;
                        bv = v;
                    }
                }
            }
            if (bu == 0) break;
            VertexSet s = {bu, bv};
            VertexSet q;
            std::vector<std::pair<int, int>> stable_pairs = {{bu, bv}};
            auto in_set = [](const VertexSet& set, int v) {
                return std::find(set.begin(), set.end(), v) != set.end();
            };
            // A candidate keeps alpha(S) at two exactly when it completes no
            // stable triple with a stable pair of S.
            auto keeps_alpha = [&](int v) {
                for (const auto& [a, b] : stable_pairs)
                    if (!g.adjacent(v, a) && !g.adjacent(v, b)) return false;
                return true;
            };
            for (;;) {
                int pick = 0;
                double wgt = -1.0;
                for (int v = 1; v <= n; ++v) {
                    if (forbidden[v] || in_set(s, v) || in_set(q, v)) continue;
                    bool ok = true;
                    for (int m : q)
                        if (!g.adjacent(v, m)) {
                            ok = false;
                            break;
                        }
                    if (!ok || !keeps_alpha(v)) continue;
                    if (p.x_of(v, j) > wgt + 1e-12) {
                        wgt = p.x_of(v, j);
                        pick = v;
                    }
                }
                if (pick == 0) break;
                bool dominates = true;
                for (int m : s)
                    if (!g.adjacent(pick, m)) {
                        dominates = false;
                        break;
                    }
                if (dominates) {
                    q.push_back(pick);
                } else {
                    for (int m : s)
                        if (!g.adjacent(pick, m)) stable_pairs.emplace_back(pick, m);
                    s.push_back(pick);
                }
            }
            if (!q.empty()) {
                VertexSet full = s;
                full.insert(full.end(), q.begin(), q.end());
                std::sort(full.begin(), full.end());
                std::sort(q.begin(), q.end());
                CutRow row = two_rank_cut(g, full, q, j);
                if (row.violation(p) > ctx.tol) out.push_back(std::move(row));
            }
            for (int v : s)
                if (!forbidden[v]) {
                    forbidden[v] = 1;
                    --open;
                }
        }
    }
    return out;
}

std::vector<CutRow> separate_s_color(const SeparationContext& ctx, const FracPoint& p) {
    int n = ctx.graph->num_vertices();
    std::vector<CutRow> out;
    int t = 0;
    for (int j = ctx.chi_ub; j >= 1; --j)
        if (p.w_of(j) > kIntTol) {
            t = j;
            break;
        }
    if (t == 0 || p.w_of(t) > 1.0 - kIntTol) return out;
    int pad = std::numeric_limits<int>::max();
    for (int k = 1; k <= t; ++k)
        if (n % k != 0) pad = std::min(pad, n - k * (n / k));
    if (pad == std::numeric_limits<int>::max()) return out;
    int s_min = std::max(2, 1 + pad);
    std::vector<int> frac_count(t + 1, 0);
    for (int j = 1; j <= t; ++j)
        for (int v = 1; v <= n; ++v)
            if (is_fractional(p.x_of(v, j))) ++frac_count[j];
    std::vector<int> order(t);
    for (int j = 1; j <= t; ++j) order[j - 1] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return frac_count[a] > frac_count[b]; });
    std::vector<char> barred(t + 1, 0);
    int open = t;
    while (open > 2) {
        std::vector<int> avail;
        for (int j : order)
            if (!barred[j]) avail.push_back(j);
        int s_max = std::min({t - 2, n - 3, static_cast<int>(avail.size())});
        if (s_min > s_max) break;
        double best = -std::numeric_limits<double>::infinity();
        int best_s = 0;
        CutRow best_row;
        for (int s = s_min; s <= s_max; ++s) {
            VertexSet classes(avail.begin(), avail.begin() + s);
            std::sort(classes.begin(), classes.end());
            CutRow row = s_color_cut(classes, n);
            double viol = row.violation(p);
            if (viol > best + 1e-12) {
                best = viol;
                best_s = s;
                best_row = std::move(row);
            }
        }
        if (best_s == 0) break;
        if (best > ctx.tol) out.push_back(std::move(best_row));
        barred[avail.front()] = 1;
        --open;
    }
    return out;
}

std::vector<CutRow> separate_subneighborhood(const SeparationContext& ctx,
                                             const FracPoint& p) {
    const Graph& g = *ctx.graph;
    int n = g.num_vertices();
    std::vector<CutRow> out;
    int jmax = std::min(ctx.chi_ub, n - 1);
    for (int u = 1; u <= n; ++u) {
        if (ctx.alpha_lo[u] < 3) continue;
        const VertexSet& s = g.neighbors(u);
        for (int j = 1; j <= jmax; ++j) {
            CutRow row = subneighborhood_cut(g, u, j, s, ctx.alpha_hi[u], ctx.chi_lb);
            if (row.violation(p) > ctx.tol) out.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<CutRow> separate_outside_neighborhood(const SeparationContext& ctx,
                                                  const FracPoint& p) {
    const Graph& g = *ctx.graph;
    int n = g.num_vertices();
    std::vector<CutRow> out;
    int jmax = std::min(ctx.chi_ub, n / 2);
    for (int u = 1; u <= n; ++u) {
        if (ctx.alpha_lo[u] < 3) continue;
        for (int j = 1; j <= jmax; ++j) {
            if (ctx.alpha_lo[u] < n / std::max(j, ctx.chi_lb)) continue;
            CutRow row = outside_neighborhood_cut(g, u, j, ctx.chi_lb);
            if (row.violation(p) > ctx.tol) out.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<CutRow> separate_clique_neighborhood(const SeparationContext& ctx,
                                                 const FracPoint& p) {
    const Graph& g = *ctx.graph;
    int n = g.num_vertices();
    std::vector<CutRow> out;
    int k_lo = std::max(3, ceil_div(n, ctx.chi_ub));
    for (const VertexSet& q : ctx.clique_pool) {
        std::vector<char> excluded(n + 1, 0);
        for (int m : q) {
            excluded[m] = 1;
            for (int v : g.neighbors(m)) excluded[v] = 1;
        }
        for (int u = 1; u <= n; ++u) {
            if (excluded[u]) continue;
            for (int j = 1; j <= ctx.chi_ub; ++j) {
                int k_hi = std::min(
                    {ceil_div(n, j), ceil_div(n, ctx.chi_lb), ctx.alpha_hi[u] + 1});
                for (int k = k_lo; k <= k_hi; ++k) {
                    CutRow row = clique_neighborhood_cut(g, u, j, k, q, ctx.alpha_hi[u]);
                    if (row.violation(p) > ctx.tol) out.push_back(std::move(row));
                }
            }
        }
    }
    return out;
}

std::vector<CutRow> run_strategy(Strategy s, SeparationContext& ctx, const FracPoint& p) {
    std::vector<CutRow> merged;
    std::set<std::string> seen;
    for (CutFamily family : strategy_families(s)) {
        std::vector<CutRow> rows;
        switch (family) {
        case CutFamily::clique: rows = separate_cliques(ctx, p); break;
        case CutFamily::two_rank: rows = separate_two_rank(ctx, p); break;
        case CutFamily::block: rows = separate_blocks(ctx, p); break;
        case CutFamily::s_color: rows = separate_s_color(ctx, p); break;
        case CutFamily::subneighborhood: rows = separate_subneighborhood(ctx, p); break;
        case CutFamily::outside_neighborhood:
            rows = separate_outside_neighborhood(ctx, p);
            break;
        case CutFamily::clique_neighborhood:
            rows = separate_clique_neighborhood(ctx, p);
            break;
        default: break;
        }
        std::vector<std::pair<double, std::string>> ranking(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            ranking[i] = {rows[i].violation(p), rows[i].key()};
        std::vector<std::size_t> idx(rows.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (ranking[a].first != ranking[b].first)
                return ranking[a].first > ranking[b].first;
            return ranking[a].second < ranking[b].second;
        });
        int taken = 0;
        for (std::size_t i : idx) {
            if (taken >= kFamilyCap) break;
            if (!seen.insert(ranking[i].second).second) continue;
            merged.push_back(std::move(rows[i]));
            ++taken;
        }
    }
    if (static_cast<int>(merged.size()) > kRoundCap) merged.resize(kRoundCap);
    return merged;
}

} // namespace eqcol
