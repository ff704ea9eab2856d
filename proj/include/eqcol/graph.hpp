// Simple undirected graphs with 1-based vertex labels, plus the greedy
// clique / stable-set helpers the solver's initialization relies on.
#ifndef EQCOL_GRAPH_HPP
#define EQCOL_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace eqcol {

// A set of vertices, kept sorted ascending. Vertices are 1-based.
using VertexSet = std::vector<int>;

class Graph {
public:
    Graph() = default;

    // Builds a graph on vertices 1..n. Throws std::invalid_argument on
    // out-of-range endpoints, self-loops or duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<int>& neighbors(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet vertices() const;
    VertexSet open_neighborhood(int v) const { return neighbors(v); }
    VertexSet closed_neighborhood(int v) const;

    bool is_isolated(int v) const { return degree(v) == 0; }
    VertexSet isolated_vertices() const;

    // Lowest-index vertex adjacent to every other vertex, if any.
    std::optional<int> universal_vertex() const;

    bool is_clique(const VertexSet& s) const;
    bool is_stable(const VertexSet& s) const;

    // Induced subgraph on s, relabeled 1..|s| following the order of s.
    // When old_label is given, (*old_label)[new - 1] is the original vertex.
    Graph induced(const VertexSet& s, std::vector<int>* old_label = nullptr) const;

    // G - N[v]: removes v and all its neighbors.
    Graph without_closed_neighborhood(int v) const;

    // Applies the permutation new_label[old - 1] = new. Throws if new_label
    // is not a permutation of 1..n.
    Graph relabeled(const std::vector<int>& new_label) const;

private:
    int idx(int u, int v) const { return (u - 1) * n_ + (v - 1); }
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;      // normalized u < v, sorted
    std::vector<unsigned char> adj_;              // n x n adjacency matrix
    std::vector<std::vector<int>> nbr_;           // sorted neighbor lists
};

Graph complement(const Graph& g);

// Greedy 1-maximal clique: grows from a highest-degree vertex, repeatedly
// adding the common neighbor of highest degree (ties: lowest index).
VertexSet maximal_clique(const Graph& g);

// Greedy clique partition: repeatedly grows a clique from the lowest-index
// uncovered vertex, adding the uncovered common neighbor of highest degree
// (ties: lowest index). Returns the number of cliques used, an upper bound
// on the clique partition number.
int clique_partition_number(const Graph& g);

// Heuristic bounds (lo, hi) with lo <= alpha(G[s]) <= hi. The lower bound
// comes from a greedy stable set picking the vertex of minimum residual
// degree; the upper bound from a greedy clique cover of G[s].
std::pair<int, int> stability_bounds(const Graph& g, const VertexSet& s);

} // namespace eqcol

#endif
