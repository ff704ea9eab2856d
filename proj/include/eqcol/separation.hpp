// Separation heuristics for the cut families in cuts.hpp, plus the nested
// strategy ladder S1..S7 that selects which families run in a round.
//
// Every routine takes the current fractional point and returns rows violated
// by more than ctx.tol. The clique routine additionally caches each maximal
// clique it builds into ctx.clique_pool; the clique-neighborhood routine
// enumerates over that pool, so run_strategy keeps the family order fixed.
#ifndef EQCOL_SEPARATION_HPP
#define EQCOL_SEPARATION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "eqcol/cuts.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/model.hpp"

namespace eqcol {

// State shared across the rounds of one cutting-plane run: the graph, the
// current chromatic bounds, per-vertex stability bounds of each open
// neighborhood, and the pool of maximal cliques seen so far.
struct SeparationContext {
    const Graph* graph = nullptr;
    int chi_lb = 2;
    int chi_ub = 2;
    std::vector<int> alpha_lo; // alpha_lo[u] <= alpha(N(u)), 1-based
    std::vector<int> alpha_hi; // alpha(N(u)) <= alpha_hi[u]
    std::vector<VertexSet> clique_pool;
    double tol = 1e-5;

    bool pool_contains(const VertexSet& q) const;
};

SeparationContext make_separation_context(const Graph& g, int chi_lb, int chi_ub);

// S1 separates cliques only; each later strategy adds one family on top of
// the previous one, in the order 2-rank, block, S-color, subneighborhood,
// outside-neighborhood, clique-neighborhood.
enum class Strategy { s1, s2, s3, s4, s5, s6, s7 };

const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);
std::vector<CutFamily> strategy_families(Strategy s);

// One greedy maximal clique per color, grown from the heaviest adjacent pair
// by x*-weight and extended to maximality; built cliques land in the pool
// whether or not they yield a violated row.
std::vector<CutRow> separate_cliques(SeparationContext& ctx, const FracPoint& p);

// Full enumeration over vertices and colors 2..ub.
std::vector<CutRow> separate_blocks(const SeparationContext& ctx, const FracPoint& p);

// Greedy growth of (S, Q) per color from the heaviest non-adjacent pair with
// weight below one, keeping the stability number of S at two. Vertices of a
// built S are barred from later sets of the same color until five or fewer
// candidates remain.
std::vector<CutRow> separate_two_rank(const SeparationContext& ctx, const FracPoint& p);

// Scans color sets drawn from the most fractional classes below the last
// fractional w entry, barring one class per emitted set until two remain.
std::vector<CutRow> separate_s_color(const SeparationContext& ctx, const FracPoint& p);

// Enumerations over (u, j) for vertices whose neighborhood surely holds a
// stable set of size three; smaller neighborhoods are covered by the clique
// and 2-rank routines.
std::vector<CutRow> separate_subneighborhood(const SeparationContext& ctx, const FracPoint& p);
std::vector<CutRow> separate_outside_neighborhood(const SeparationContext& ctx,
                                                  const FracPoint& p);

// Grid enumeration over pool cliques Q, vertices u outside N[Q], colors and
// class sizes k.
std::vector<CutRow> separate_clique_neighborhood(const SeparationContext& ctx,
                                                 const FracPoint& p);

// Runs the enabled families in the fixed order, keeps the 50 most violated
// rows per family, drops duplicate rows and caps the round at 200 cuts.
std::vector<CutRow> run_strategy(Strategy s, SeparationContext& ctx, const FracPoint& p);

} // namespace eqcol

#endif
