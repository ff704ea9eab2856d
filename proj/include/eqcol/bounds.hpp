// Initialization heuristics: the vertex labeling the symmetry-breaking
// rows rely on, a greedy equitable coloring for the upper bound, and the
// clique / clique-partition lower bound.
#ifndef EQCOL_BOUNDS_HPP
#define EQCOL_BOUNDS_HPP

#include <utility>
#include <vector>

#include "eqcol/coloring.hpp"
#include "eqcol/graph.hpp"

namespace eqcol {

// Relabeling permutation: a greedy maximal clique receives labels 1..q,
// the remaining vertices receive q+1..n in order of decreasing degree
// (ties: lowest original index). Returns new_label with
// new_label[old - 1] = new.
std::vector<int> label_vertices(const Graph& g);

// Greedy equitable coloring. Phase one colors vertices in label order,
// assigning each the lowest-index smallest non-conflicting class and
// opening a class when none fits. Phase two rebalances by moving vertices
// from largest to smallest classes while the spread exceeds one, adding a
// fresh class whenever no move applies. Returns (k, witness).
std::pair<int, EqColoring> naive_upper_bound(const Graph& g);

// max over the clique size q and, per vertex v, ceil((n+1) / (p + 2))
// where p is the greedy clique-partition value of G - N[v].
int lower_bound(const Graph& g);

} // namespace eqcol

#endif
