// Equitable colorings: the exact backtracking oracle, the swap / intro
// operators used to build point families, and the binary encoding of a
// coloring as a vertex of the assignment polytope.
//
// Conventions. A k-eqcol assigns colors 1..k to all vertices so that
// adjacent vertices differ, every color is used, and each class has
// floor(n/k) or ceil(n/k) vertices. The binary encoding over the full
// color range 1..n is x_{vj} = 1 iff vertex v has color j, and w_j = 1
// iff j <= k; the dense layout places x_{vj} at (v-1)*n + (j-1) and w_j
// at n*n + (j-1).
#ifndef EQCOL_COLORING_HPP
#define EQCOL_COLORING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eqcol/graph.hpp"

namespace eqcol {

class EqColoring {
public:
    // colors[v-1] is the color of vertex v; all of 1..k must appear.
    EqColoring(std::vector<int> colors, int k);

    int num_vertices() const { return static_cast<int>(color_.size()); }
    int num_colors() const { return k_; }
    int color(int v) const { return color_[v - 1]; }
    const std::vector<int>& colors() const { return color_; }

    VertexSet color_class(int j) const;
    std::vector<int> class_sizes() const; // index j-1 holds |C_j|

    bool operator==(const EqColoring& o) const { return k_ == o.k_ && color_ == o.color_; }

private:
    std::vector<int> color_;
    int k_ = 0;
};

// True iff c is a proper coloring of g whose class sizes are all
// floor(n/k) or ceil(n/k).
bool is_equitable(const Graph& g, const EqColoring& c);

// Cyclic relabeling along the distinct colors cycle = (j_1, ..., j_r):
// the new class of j_t is the old class of j_{t+1}, and the new class of
// j_r is the old class of j_1. Keeps the partition, so equitability is
// preserved. Throws std::domain_error on repeated or out-of-range colors.
EqColoring swap_classes(const EqColoring& c, const std::vector<int>& cycle);

// Moves v into a fresh class with the new color k+1. Only defined when
// ceil(n/2) <= k <= n-1 and v's class has exactly two vertices; throws
// std::domain_error otherwise. The result is a (k+1)-eqcol.
EqColoring intro_color(const EqColoring& c, int v);

// A 0/1 vertex of the full-space formulation, stored compactly as the
// coloring it encodes.
class BinaryPoint {
public:
    BinaryPoint(std::vector<int> colors, int k);

    int num_vertices() const { return static_cast<int>(color_.size()); }
    int num_colors() const { return k_; }
    int x(int v, int j) const { return color_[v - 1] == j ? 1 : 0; }
    int w(int j) const { return j <= k_ ? 1 : 0; }

    // Dense coordinates over R^{n*n + n} in the layout documented above.
    std::vector<double> dense() const;
    int dimension() const { int n = num_vertices(); return n * n + n; }

    const std::vector<int>& colors() const { return color_; }

    bool operator==(const BinaryPoint& o) const { return k_ == o.k_ && color_ == o.color_; }
    bool operator<(const BinaryPoint& o) const {
        return k_ != o.k_ ? k_ < o.k_ : color_ < o.color_;
    }

private:
    std::vector<int> color_;
    int k_ = 0;
};

BinaryPoint to_binary(const EqColoring& c);

struct OracleResult {
    int chi_eq = 0;
    std::vector<int> skip;          // k in (chi_eq, n] with no k-eqcol, ascending
    bool monotone = false;          // skip.empty()
    std::map<int, EqColoring> witness; // one k-eqcol per attainable k
};

// Exact search for a k-eqcol: backtracking over vertices in descending
// degree order with class-capacity pruning and first-open-class symmetry
// breaking. Returns a witness or nullopt. Exponential in the worst case;
// intended for n <= 20 sparse / n <= 12 dense.
std::optional<EqColoring> exists_eqcol(const Graph& g, int k);

// chi_eq, the skip set and per-k witnesses, by running exists_eqcol for
// every k in 1..n.
OracleResult oracle(const Graph& g);

// Every labeled equitable coloring of g as a binary point, each exactly
// once. Guarded to n <= 8 (the count grows like n!).
std::vector<BinaryPoint> enumerate_binary_points(const Graph& g);

} // namespace eqcol

#endif
