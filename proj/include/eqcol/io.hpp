// Graph file IO, the deterministic random-graph sampler, and the small
// named instances used across the tests and the benchmark driver.
#ifndef EQCOL_IO_HPP
#define EQCOL_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "eqcol/graph.hpp"

namespace eqcol {

// DIMACS-style text: 'c' comment lines, one 'p edge <n> <m>' header, then
// <m> lines 'e <u> <v>' with 1-based endpoints. Duplicate edges collapse.
// Parse errors report the offending line number.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);
void write_dimacs(const Graph& g, std::ostream& out);

// splitmix64; the sampler below documents exactly how bits become edges so
// instance sets are reproducible from (n, density, seed) alone.
struct Splitmix64 {
    std::uint64_t state;
    explicit Splitmix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // (next() >> 11) * 2^-53, uniform in [0, 1).
    double next_unit();
};

// Visits vertex pairs in lexicographic order (1,2), (1,3), ..., (n-1,n) and
// keeps each pair as an edge when next_unit() < density_percent / 100.
Graph random_graph(int n, int density_percent, std::uint64_t seed);

namespace fixtures {

// Complete bipartite graph on parts {1,2,3} and {4,5,6}.
Graph k33();

// Cycle 1-2-3-4-5-1.
Graph c5();

// n = 11: the join of edge {1,2} with cycle 3-4-5-6-7-3, plus the pendant
// path 3-8-9-10-11.
Graph joined_cycle_tail();

// n = 11: star center 1 with leaves 2..6, plus the path 2-7-8-9-10-11.
Graph star_path();

} // namespace fixtures

} // namespace eqcol

#endif
