// The valid-inequality families. Every cut is stored canonically over the
// full color range 1..n as "sum of terms <= 0" with integer coefficients,
// so it can be checked against enumerated binary points, evaluated on
// fractional points, and projected into a reduced model.
//
// Families and their shapes (rows written before moving everything left):
//   block(v, j)          sum_{k>=j} x_vk <= w_j
//   clique(Q, j)         sum_{v in Q} x_vj <= w_j, Q a clique
//   rank(S, j, a)        sum_{v in S} x_vj + sum_v sum_{k=n-a+1}^{n-1} x_vk
//                          <= a w_j + w_{n-a+1} - w_n, a >= alpha(S), j <= n-a
//   two_rank(S, Q, j)    sum_{v in S\Q} x_vj + 2 sum_{v in Q} x_vj <= 2 w_j,
//                          alpha(S) = 2, every q in Q sees all of S
//   subneighborhood(u, j, S)
//                        xi_j x_uj + sum_{v in S} x_vj
//                          + sum_{k>j} (xi_j - xi_k) x_uk <= xi_j w_j,
//                          S inside N(u), xi_k = min(ceil(n/chi_lo),
//                          ceil(n/k), alpha_hi)
//   outside_neighborhood(u, j)
//                        (floor(n/t_j)-1) x_uj - sum_{v not in N[u]} x_vj
//                          + sum_{k>t_j} b_k x_uk
//                          <= sum_{k>t_j} b_k (w_k - w_{k+1}),
//                          t_j = max(j, chi_lo), b_k = floor(n/t_j)-floor(n/k)
//   clique_neighborhood(u, j, k, Q)
//                        see the constructor; couples the colors of u, its
//                        neighborhood, a far clique Q and the top colors
//   s_color(S)           sum_{j in S} sum_v x_vj
//                          <= sum_k b_k (w_k - w_{k+1}),
//                          b_k = d_k floor(n/k) + min(d_k, n - k floor(n/k)),
//                          d_k = |S intersect 1..k|
//
// Heuristic parameters weaken soundly: a stability upper bound alpha_hi
// only raises right-hand sides, and a chromatic lower bound chi_lo only
// relaxes the coefficients that depend on it.
#ifndef EQCOL_CUTS_HPP
#define EQCOL_CUTS_HPP

#include <string>
#include <vector>

#include "eqcol/coloring.hpp"
#include "eqcol/graph.hpp"
#include "eqcol/model.hpp"

namespace eqcol {

enum class CutFamily {
    nonneg,
    block,
    clique,
    rank,
    two_rank,
    subneighborhood,
    outside_neighborhood,
    clique_neighborhood,
    s_color,
};

const char* cut_family_name(CutFamily f);

struct CutRow {
    CutFamily family{};
    int n = 0;
    std::vector<SpaceTerm> terms;  // canonical "<= 0" form, sorted, no zeros
    std::string label;

    double violation(const BinaryPoint& p) const;
    double violation(const FracPoint& p) const;
    LinRow project(const ModelSpec& model) const;
    // Canonical text key over the terms; identical inequalities from
    // different families collide on purpose.
    std::string key() const;
};

// x_vj >= 0 written as -x_vj <= 0; never separated, used in face studies.
CutRow nonneg_row(int v, int j, int n);
CutRow block_cut(int v, int j, int n);
CutRow clique_cut(const Graph& g, const VertexSet& q, int j);
CutRow rank_cut(const Graph& g, const VertexSet& s, int j, int alpha);
CutRow two_rank_cut(const Graph& g, const VertexSet& s, const VertexSet& q, int j);
CutRow subneighborhood_cut(const Graph& g, int u, int j, const VertexSet& s, int alpha_hi,
                           int chi_lo);
CutRow outside_neighborhood_cut(const Graph& g, int u, int j, int chi_lo);
CutRow clique_neighborhood_cut(const Graph& g, int u, int j, int k, const VertexSet& q,
                               int alpha_hi);
CutRow s_color_cut(const std::vector<int>& color_set, int n);

// Largest violation of the row over every equitable binary point of g;
// at most zero exactly when the row is valid for g. Enumeration-backed,
// so n <= 8 applies.
double max_violation_over_eqcols(const CutRow& row, const Graph& g);

} // namespace eqcol

#endif
