#include "eqcol/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqcol {

std::vector<int> label_vertices(const Graph& g) {
    int n = g.num_vertices();
    VertexSet clique = maximal_clique(g);
    std::vector<char> in_clique(n + 1, 0);
    for (int v : clique)
        in_clique[v] = 1;

    auto by_degree = [&](int a, int b) { return g.degree(a) > g.degree(b); };
    std::vector<int> head = clique;
    std::stable_sort(head.begin(), head.end(), by_degree);
    std::vector<int> tail;
    for (int v = 1; v <= n; ++v)
        if (!in_clique[v])
            tail.push_back(v);
    std::stable_sort(tail.begin(), tail.end(), by_degree);

    std::vector<int> new_label(n, 0);
    int next = 1;
    for (int v : head)
        new_label[v - 1] = next++;
    for (int v : tail)
        new_label[v - 1] = next++;
    return new_label;
}

std::pair<int, EqColoring> naive_upper_bound(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0)
        throw std::invalid_argument("naive_upper_bound: empty graph");
    std::vector<std::vector<int>> cls;
    std::vector<int> color_of(n + 1, 0);

    auto conflicts = [&](const std::vector<int>& members, int v) {
        for (int u : members)
            if (g.adjacent(u, v))
                return true;
        return false;
    };

    for (int v = 1; v <= n; ++v) {
        int pick = -1;
        for (size_t c = 0; c < cls.size(); ++c) {
            if (conflicts(cls[c], v))
                continue;
            if (pick == -1 || cls[c].size() < cls[pick].size())
                pick = static_cast<int>(c);
        }
        if (pick == -1) {
            cls.push_back({});
            pick = static_cast<int>(cls.size()) - 1;
        }
        cls[pick].push_back(v);
        color_of[v] = pick;
    }

    auto spread_exceeds_one = [&]() {
        size_t lo = cls[0].size(), hi = cls[0].size();
        for (const auto& c : cls) {
            lo = std::min(lo, c.size());
            hi = std::max(hi, c.size());
        }
        return hi - lo >= 2;
    };

    while (spread_exceeds_one()) {
        size_t lo = n, hi = 0;
        for (const auto& c : cls) {
            lo = std::min(lo, c.size());
            hi = std::max(hi, c.size());
        }
        bool moved = false;
        for (size_t from = 0; from < cls.size() && !moved; ++from) {
            if (cls[from].size() != hi)
                continue;
            for (size_t vi = 0; vi < cls[from].size() && !moved; ++vi) {
                int v = cls[from][vi];
                for (size_t to = 0; to < cls.size() && !moved; ++to) {
                    if (cls[to].size() != lo || to == from || conflicts(cls[to], v))
                        continue;
                    cls[from].erase(cls[from].begin() + vi);
                    cls[to].push_back(v);
                    moved = true;
                }
            }
        }
        if (!moved)
            cls.push_back({}); // a fresh class accepts anything next pass
    }

    // Drop classes that ended empty and renumber.
    std::vector<int> colors(n, 0);
    int k = 0;
    for (const auto& c : cls) {
        if (c.empty())
            continue;
        ++k;
        for (int v : c)
            colors[v - 1] = k;
    }
    EqColoring witness(std::move(colors), k);
    return {k, std::move(witness)};
}

int lower_bound(const Graph& g) {
    int n = g.num_vertices();
    int best = static_cast<int>(maximal_clique(g).size());
    for (int v = 1; v <= n; ++v) {
        int p = clique_partition_number(g.without_closed_neighborhood(v));
        int bound = (n + 1 + p + 1) / (p + 2); // ceil((n+1)/(p+2))
        best = std::max(best, bound);
    }
    return best;
}

} // namespace eqcol
