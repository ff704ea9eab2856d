// Benchmark batteries: run the root cutting-plane loop, and optionally the
// full solve, over a set of instances and strategies, fanned out across
// worker threads, with CSV and JSON reporting.
#ifndef EQCOL_BENCH_HPP
#define EQCOL_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqcol/graph.hpp"
#include "eqcol/separation.hpp"
#include "eqcol/solver.hpp"

namespace eqcol {

struct BenchInstance {
    std::string id;
    Graph graph;
    int density = 0; // percent tag used for grouping; 0 when not applicable
};

// Sampler entry named n<k>_d<density>_s<seed>.
BenchInstance random_instance(int n, int density_percent, std::uint64_t seed);

struct BenchOptions {
    std::vector<Strategy> strategies = {Strategy::s1, Strategy::s4};
    int rounds = 30;
    bool branch = false; // also run the enumeration after the root loop
    SolveLimits limits;  // read only when branch is set
    int threads = 0;     // 0 picks the hardware count
};

// One (instance, strategy) run. The root-loop fields always fill; the solve
// fields keep their defaults unless the options asked for branching or the
// initialization bounds already met. A failed run leaves its message in
// error and zeroes elsewhere.
struct BenchRow {
    std::string instance;
    int n = 0;
    int density = 0;
    Strategy strategy = Strategy::s1;
    int impr = 0;
    int rounds_run = 0;
    double time_to_best = 0.0;
    long cuts_to_best = 0;
    long total_cuts = 0;
    bool solved = false;
    int chi_eq = 0; // when solved
    long nodes = 0;
    double seconds = 0.0; // total wall time of the run
    std::vector<double> lb_trajectory;
    std::string error;
};

// Column means over one (density, strategy) group, rows with errors skipped.
struct BenchMean {
    int density = 0;
    Strategy strategy = Strategy::s1;
    int runs = 0;
    double impr = 0.0;
    double time_to_best = 0.0;
    double cuts_to_best = 0.0;
    double nodes = 0.0;
    double seconds = 0.0;
    double solved_fraction = 0.0;
};

// One row per (battery entry, strategy), in battery-major order regardless
// of which worker finished first.
std::vector<BenchRow> run_benchmark(const std::vector<BenchInstance>& battery,
                                    const BenchOptions& opt = {});

std::vector<BenchMean> density_means(const std::vector<BenchRow>& rows);

// Fixed header
//   instance,n,density,strategy,impr,time,cuts,solved,nodes,total_time
// one line per row, then one line per density_means group under the
// instance id mean[d=<density>,<strategy>]. Doubles print with three
// decimals.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

// The same rows as a JSON array, trajectories and error strings included.
void write_bench_json(const std::vector<BenchRow>& rows, std::ostream& out);

} // namespace eqcol

#endif
