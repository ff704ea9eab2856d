#include "eqcol/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eqcol {

namespace {

void check_colors(const std::vector<int>& colors, int k, const char* who) {
    if (k < 1 || colors.empty())
        throw std::invalid_argument(std::string(who) + ": empty coloring or k < 1");
    std::vector<char> used(k + 1, 0);
    for (int c : colors) {
        if (c < 1 || c > k)
            throw std::invalid_argument(std::string(who) + ": color out of range 1..k");
        used[c] = 1;
    }
    for (int j = 1; j <= k; ++j)
        if (!used[j])
            throw std::invalid_argument(std::string(who) + ": color " + std::to_string(j) +
                                        " unused");
}

} // namespace

EqColoring::EqColoring(std::vector<int> colors, int k) : color_(std::move(colors)), k_(k) {
    check_colors(color_, k_, "eqcoloring");
}

VertexSet EqColoring::color_class(int j) const {
    VertexSet cls;
    for (int v = 1; v <= num_vertices(); ++v)
        if (color(v) == j)
            cls.push_back(v);
    return cls;
}

std::vector<int> EqColoring::class_sizes() const {
    std::vector<int> sizes(k_, 0);
    for (int c : color_)
        ++sizes[c - 1];
    return sizes;
}

bool is_equitable(const Graph& g, const EqColoring& c) {
    if (g.num_vertices() != c.num_vertices())
        return false;
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v))
            return false;
    auto sizes = c.class_sizes();
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *lo >= 1 && *hi - *lo <= 1;
}

EqColoring swap_classes(const EqColoring& c, const std::vector<int>& cycle) {
    int k = c.num_colors();
    std::vector<char> seen(k + 1, 0);
    for (int j : cycle) {
        if (j < 1 || j > k)
            throw std::domain_error("swap: color out of range 1..k");
        if (seen[j]++)
            throw std::domain_error("swap: repeated color in cycle");
    }
    // relabel[old] = new: the class of cycle[t+1] becomes the class of cycle[t].
    std::vector<int> relabel(k + 1);
    std::iota(relabel.begin(), relabel.end(), 0);
    int r = static_cast<int>(cycle.size());
    for (int t = 0; t + 1 < r; ++t)
        relabel[cycle[t + 1]] = cycle[t];
    if (r >= 1)
        relabel[cycle[0]] = cycle[r - 1];
    std::vector<int> colors = c.colors();
    for (int& x : colors)
        x = relabel[x];
    return EqColoring(std::move(colors), k);
}

EqColoring intro_color(const EqColoring& c, int v) {
    int n = c.num_vertices();
    int k = c.num_colors();
    if (v < 1 || v > n)
        throw std::domain_error("intro: vertex out of range");
    if (k < (n + 1) / 2 || k > n - 1)
        throw std::domain_error("intro: requires ceil(n/2) <= k <= n-1");
    if (static_cast<int>(c.color_class(c.color(v)).size()) != 2)
        throw std::domain_error("intro: class of v must have exactly two vertices");
    std::vector<int> colors = c.colors();
    colors[v - 1] = k + 1;
    return EqColoring(std::move(colors), k + 1);
}

BinaryPoint::BinaryPoint(std::vector<int> colors, int k) : color_(std::move(colors)), k_(k) {
    check_colors(color_, k_, "binary point");
}

std::vector<double> BinaryPoint::dense() const {
    int n = num_vertices();
    std::vector<double> row(static_cast<size_t>(n) * n + n, 0.0);
    for (int v = 1; v <= n; ++v)
        row[static_cast<size_t>(v - 1) * n + (color_[v - 1] - 1)] = 1.0;
    for (int j = 1; j <= k_; ++j)
        row[static_cast<size_t>(n) * n + (j - 1)] = 1.0;
    return row;
}

BinaryPoint to_binary(const EqColoring& c) { return BinaryPoint(c.colors(), c.num_colors()); }

namespace {

// Shared backtracking state for the k-eqcol search over unordered classes.
struct PartitionSearch {
    const Graph& g;
    int k, base, rem;
    std::vector<int> order;                 // vertices, descending degree
    std::vector<std::vector<int>> members;  // members per class slot
    std::vector<int> assigned_class;        // per vertex, -1 if none
    int opened = 0;
    int big = 0; // classes at size base+1

    PartitionSearch(const Graph& graph, int classes) : g(graph), k(classes) {
        int n = g.num_vertices();
        base = n / k;
        rem = n % k;
        order.resize(n);
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        members.assign(k, {});
        assigned_class.assign(n + 1, -1);
    }

    bool class_can_take(int cls) const {
        int size = static_cast<int>(members[cls].size());
        if (size >= base + 1)
            return false;
        if (size == base && big >= rem)
            return false;
        return true;
    }

    bool conflicts(int cls, int v) const {
        for (int u : members[cls])
            if (g.adjacent(u, v))
                return true;
        return false;
    }

    // Every class still needs to reach size >= base; unopened classes need
    // base each. Prunes when the remaining vertices cannot cover that.
    bool deficit_ok(int placed) const {
        int remaining = g.num_vertices() - placed;
        int need = (k - opened) * base;
        for (int c = 0; c < opened; ++c)
            need += std::max(0, base - static_cast<int>(members[c].size()));
        return need <= remaining;
    }

    bool search(int i) {
        if (i == g.num_vertices())
            return opened == k;
        int v = order[i];
        int limit = std::min(opened, k - 1);
        for (int cls = 0; cls <= limit; ++cls) {
            bool opening = cls == opened;
            if (!class_can_take(cls) || conflicts(cls, v))
                continue;
            members[cls].push_back(v);
            assigned_class[v] = cls;
            if (opening)
                ++opened;
            if (static_cast<int>(members[cls].size()) == base + 1)
                ++big;
            if (deficit_ok(i + 1) && search(i + 1))
                return true;
            if (static_cast<int>(members[cls].size()) == base + 1)
                --big;
            if (opening)
                --opened;
            assigned_class[v] = -1;
            members[cls].pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<EqColoring> exists_eqcol(const Graph& g, int k) {
    int n = g.num_vertices();
    if (k < 1)
        throw std::invalid_argument("exists_eqcol: k < 1");
    if (k > n)
        return std::nullopt;
    PartitionSearch s(g, k);
    if (!s.search(0))
        return std::nullopt;
    std::vector<int> colors(n);
    for (int v = 1; v <= n; ++v)
        colors[v - 1] = s.assigned_class[v] + 1;
    EqColoring c(std::move(colors), k);
    return c;
}

OracleResult oracle(const Graph& g) {
    OracleResult res;
    int n = g.num_vertices();
    for (int k = 1; k <= n; ++k) {
        auto c = exists_eqcol(g, k);
        if (c) {
            if (res.chi_eq == 0)
                res.chi_eq = k;
            res.witness.emplace(k, *c);
        } else if (res.chi_eq != 0) {
            res.skip.push_back(k);
        }
    }
    res.monotone = res.skip.empty();
    return res;
}

namespace {

void enumerate_for_k(const Graph& g, int k, std::vector<BinaryPoint>& out) {
    int n = g.num_vertices();
    int base = n / k, rem = n % k;
    std::vector<int> colors(n, 0), size(k + 1, 0);
    int big = 0;

    // DFS over vertices 1..n in label order; every admissible labeled
    // coloring is reached exactly once.
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.emplace_back(colors, k);
            return;
        }
        int remaining = n - v + 1;
        int deficit = 0;
        for (int j = 1; j <= k; ++j)
            deficit += std::max(0, base - size[j]);
        if (deficit > remaining)
            return;
        for (int j = 1; j <= k; ++j) {
            if (size[j] >= base + 1 || (size[j] == base && big >= rem))
                continue;
            bool clash = false;
            for (int u : g.neighbors(v))
                if (u < v && colors[u - 1] == j) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colors[v - 1] = j;
            ++size[j];
            if (size[j] == base + 1)
                ++big;
            self(self, v + 1);
            if (size[j] == base + 1)
                --big;
            --size[j];
            colors[v - 1] = 0;
        }
    };
    rec(rec, 1);
}

} // namespace

std::vector<BinaryPoint> enumerate_binary_points(const Graph& g) {
    int n = g.num_vertices();
    if (n > 8)
        throw std::invalid_argument("enumerate_binary_points: refusing n > 8");
    std::vector<BinaryPoint> pts;
    for (int k = 1; k <= n; ++k)
        enumerate_for_k(g, k, pts);
    return pts;
}

} // namespace eqcol
