#include "eqcol/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqcol {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long m = -1;
    std::set<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(line_no, "second problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m)) fail(line_no, "malformed problem line");
            if (kind != "edge" && kind != "col") fail(line_no, "unknown problem kind '" + kind + "'");
            if (n < 1 || m < 0) fail(line_no, "nonpositive sizes");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail(line_no, "edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) fail(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "endpoint out of range");
            if (u == v) fail(line_no, "self loop");
            edges.insert({std::min(u, v), std::max(u, v)});
            continue;
        }
        fail(line_no, "unknown line tag '" + tag + "'");
    }
    if (n < 0) throw std::runtime_error("dimacs: missing problem line");
    if (m >= 0 && static_cast<long>(edges.size()) != m)
        throw std::runtime_error("dimacs: header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    return Graph(n, {edges.begin(), edges.end()});
}

Graph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("dimacs: cannot open " + path);
    return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::uint64_t Splitmix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Splitmix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph random_graph(int n, int density_percent, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: need at least one vertex");
    if (density_percent < 0 || density_percent > 100)
        throw std::invalid_argument("random_graph: density outside [0, 100]");
    Splitmix64 rng(seed);
    double p = density_percent / 100.0;
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_unit() < p) edges.push_back({u, v});
    return Graph(n, edges);
}

namespace fixtures {

Graph k33() {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= 3; ++u)
        for (int v = 4; v <= 6; ++v) e.push_back({u, v});
    return Graph(6, e);
}

Graph c5() {
    return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

Graph joined_cycle_tail() {
    std::vector<std::pair<int, int>> e;
    for (int v = 3; v <= 7; ++v) {
        e.push_back({1, v});
        e.push_back({2, v});
    }
    e.push_back({1, 2});
    e.insert(e.end(), {{3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}});
    e.insert(e.end(), {{3, 8}, {8, 9}, {9, 10}, {10, 11}});
    return Graph(11, e);
}

Graph star_path() {
    std::vector<std::pair<int, int>> e;
    for (int v = 2; v <= 6; ++v) e.push_back({1, v});
    e.insert(e.end(), {{2, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}});
    return Graph(11, e);
}

} // namespace fixtures

} // namespace eqcol
