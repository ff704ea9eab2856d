// The cutting-plane loop and the cut-and-branch driver built on top of it.
//
// A solve runs in the reduced model space of build_formulation: the
// objective is the number of used colors, every LP bound is a valid lower
// bound on chi_eq, and any integral point that also satisfies the lazy
// representative rows encodes an equitable coloring.
#ifndef EQCOL_SOLVER_HPP
#define EQCOL_SOLVER_HPP

#include <optional>
#include <vector>

#include "eqcol/coloring.hpp"
#include "eqcol/cuts.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/model.hpp"
#include "eqcol/separation.hpp"

namespace eqcol {

// A cut added during a run, kept in full space so it can be replayed
// against enumerated colorings later.
struct EmittedCut {
    CutRow row;
    double violation = 0.0; // at the fractional point that produced it
    int round = 0;          // 1-based cutting-plane round
};

struct CutLoopReport {
    // Bound after each round, rounds+1 entries; an early stop repeats the
    // final value so the shape is independent of where the loop ended.
    std::vector<double> lb_trajectory;
    int impr = 0;              // ceil(last) - ceil(first)
    double time_to_best = 0.0; // seconds until the final ceiling first holds
    long cuts_to_best = 0;
    long total_cuts = 0;
    int rounds_run = 0; // separation rounds that actually executed
    std::vector<EmittedCut> cuts;
};

struct SolveLimits {
    double time_limit_sec = 7200.0;
    long node_cap = 100000000;
};

enum class SolveStatus { optimal, time_limit };

struct SolveReport {
    SolveStatus status = SolveStatus::time_limit;
    int chi_eq = 0; // meaningful when status is optimal
    std::optional<EqColoring> incumbent;
    long nodes = 0;
    double seconds = 0.0;
    CutLoopReport root;
    int lb = 0, ub = 0; // initialization bounds
    // The relabeling the model was built under (new_label[orig - 1] = new);
    // root.cuts live on the relabeled graph. Empty when the solve was
    // special-cased and no model existed.
    std::vector<int> labeling;
};

// Smallest integer >= v up to a 1e-6 slack, so a bound of 2.9999994 still
// rounds to 3.
int ceil_bound(double v);

// Separate-and-resolve rounds on the relaxation of model. Each round solves
// the LP, records the bound, runs the strategy at the optimum and appends
// the projected cuts together with any violated representative rows; it
// stops early once a round has nothing to add. The appended rows also land
// in model.rows, so the caller keeps the strengthened formulation. Throws
// std::runtime_error if the initial relaxation is infeasible.
CutLoopReport cutting_plane(const Graph& g, ModelSpec& model, Strategy strategy,
                            int rounds = 30);

// Depth-first enumeration over variable fixings. Branches on the x entry
// closest to one half (ties: lowest vertex, then color), zero branch first,
// pruning nodes whose rounded-up bound reaches the incumbent value.
// Integral optima must pass the representative rows, otherwise the violated
// rows are added and the node re-solved; if every x entry is integral while
// some w is not, the most fractional w is branched instead.
SolveReport branch_and_bound(const Graph& g, const ModelSpec& model,
                             const EqColoring& incumbent, const SolveLimits& limits = {});

// Full pipeline: graphs with no edges, with a universal vertex (pairing
// search over the complement), shaped as a complete graph plus one isolated
// vertex, or with fewer than five vertices are solved directly; everything
// else goes through labeling, the greedy bounds, the cutting-plane rounds
// and the enumeration. The reported coloring is on the original labels.
SolveReport cut_and_branch(const Graph& g, Strategy strategy, const SolveLimits& limits = {});

} // namespace eqcol

#endif
