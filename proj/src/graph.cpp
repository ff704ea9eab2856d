#include "eqcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace eqcol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    nbr_.assign(n + 1, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    }
    for (auto [u, v] : seen) {
        edges_.push_back({u, v});
        adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
        nbr_[u].push_back(v);
        nbr_[v].push_back(u);
    }
    for (auto& list : nbr_)
        std::sort(list.begin(), list.end());
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return nbr_[v];
}

VertexSet Graph::vertices() const {
    VertexSet all(n_);
    std::iota(all.begin(), all.end(), 1);
    return all;
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

VertexSet Graph::isolated_vertices() const {
    VertexSet s;
    for (int v = 1; v <= n_; ++v)
        if (degree(v) == 0)
            s.push_back(v);
    return s;
}

std::optional<int> Graph::universal_vertex() const {
    for (int v = 1; v <= n_; ++v)
        if (degree(v) == n_ - 1)
            return v;
    return std::nullopt;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!adjacent(s[i], s[j]))
                return false;
    return true;
}

bool Graph::is_stable(const VertexSet& s) const {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (adjacent(s[i], s[j]))
                return false;
    return true;
}

Graph Graph::induced(const VertexSet& s, std::vector<int>* old_label) const {
    std::vector<int> new_of(n_ + 1, 0);
    for (size_t i = 0; i < s.size(); ++i) {
        check_vertex(s[i]);
        if (new_of[s[i]] != 0)
            throw std::invalid_argument("graph: induced set has a repeated vertex");
        new_of[s[i]] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_)
        if (new_of[u] && new_of[v])
            sub_edges.push_back({new_of[u], new_of[v]});
    if (old_label)
        *old_label = s;
    return Graph(static_cast<int>(s.size()), sub_edges);
}

Graph Graph::without_closed_neighborhood(int v) const {
    VertexSet closed = closed_neighborhood(v);
    VertexSet keep;
    size_t k = 0;
    for (int u = 1; u <= n_; ++u) {
        if (k < closed.size() && closed[k] == u)
            ++k;
        else
            keep.push_back(u);
    }
    return induced(keep);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
        throw std::invalid_argument("graph: relabel permutation has wrong size");
    std::vector<char> hit(n_ + 1, 0);
    for (int x : new_label) {
        if (x < 1 || x > n_ || hit[x])
            throw std::invalid_argument("graph: relabel map is not a permutation");
        hit[x] = 1;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_)
        mapped.push_back({new_label[u - 1], new_label[v - 1]});
    return Graph(n_, mapped);
}

Graph complement(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> co_edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.adjacent(u, v))
                co_edges.push_back({u, v});
    return Graph(n, co_edges);
}

namespace {

// Highest degree first, ties by lowest index.
int pick_best(const Graph& g, const std::vector<int>& candidates) {
    int best = -1;
    for (int v : candidates)
        if (best == -1 || g.degree(v) > g.degree(best))
            best = v;
    return best;
}

} // namespace

VertexSet maximal_clique(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0)
        return {};
    VertexSet clique{pick_best(g, g.vertices())};
    for (;;) {
        std::vector<int> common;
        for (int v = 1; v <= n; ++v) {
            bool ok = std::find(clique.begin(), clique.end(), v) == clique.end();
            for (int q : clique)
                ok = ok && g.adjacent(v, q);
            if (ok)
                common.push_back(v);
        }
        if (common.empty())
            break;
        clique.push_back(pick_best(g, common));
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

int clique_partition_number(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> covered(n + 1, 0);
    int cliques = 0;
    for (int start = 1; start <= n; ++start) {
        if (covered[start])
            continue;
        ++cliques;
        VertexSet clique{start};
        covered[start] = 1;
        for (;;) {
            std::vector<int> common;
            for (int v = 1; v <= n; ++v) {
                if (covered[v])
                    continue;
                bool ok = true;
                for (int q : clique)
                    ok = ok && g.adjacent(v, q);
                if (ok)
                    common.push_back(v);
            }
            if (common.empty())
                break;
            int v = pick_best(g, common);
            clique.push_back(v);
            covered[v] = 1;
        }
    }
    return cliques;
}

std::pair<int, int> stability_bounds(const Graph& g, const VertexSet& s) {
    if (s.empty())
        return {0, 0};
    Graph h = g.induced(s);
    int m = h.num_vertices();

    // Lower bound: greedy stable set, repeatedly taking the vertex of
    // minimum degree among the not-yet-excluded ones (ties: lowest index).
    std::vector<char> gone(m + 1, 0);
    std::vector<int> residual(m + 1, 0);
    for (int v = 1; v <= m; ++v)
        residual[v] = h.degree(v);
    int lo = 0, left = m;
    while (left > 0) {
        int pick = -1;
        for (int v = 1; v <= m; ++v)
            if (!gone[v] && (pick == -1 || residual[v] < residual[pick]))
                pick = v;
        ++lo;
        gone[pick] = 1;
        --left;
        for (int u : h.neighbors(pick)) {
            if (!gone[u]) {
                gone[u] = 1;
                --left;
                for (int w : h.neighbors(u))
                    if (!gone[w])
                        --residual[w];
            }
        }
    }

    int hi = clique_partition_number(h);
    return {lo, hi};
}

} // namespace eqcol
