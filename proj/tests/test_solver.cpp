#include "doctest.h"

#include <vector>

#include "eqcol/bounds.hpp"
#include "eqcol/coloring.hpp"
#include "eqcol/cuts.hpp"
#include "eqcol/io.hpp"
#include "eqcol/model.hpp"
#include "eqcol/solver.hpp"

using namespace eqcol;

namespace {

void check_optimal(const SolveReport& rep, const Graph& g, int expected_chi) {
    CHECK(rep.status == SolveStatus::optimal);
    CHECK(rep.chi_eq == expected_chi);
    REQUIRE(rep.incumbent.has_value());
    CHECK(rep.incumbent->num_colors() == expected_chi);
    CHECK(is_equitable(g, *rep.incumbent));
    CHECK(rep.lb <= expected_chi);
    CHECK(expected_chi <= rep.ub);
}

bool trajectory_monotone(const std::vector<double>& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] < t[i - 1] - 1e-9) return false;
    return true;
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("ceiling with slack absorbs simplex jitter") {
    CHECK(ceil_bound(3.0) == 3);
    CHECK(ceil_bound(2.9999994) == 3);
    CHECK(ceil_bound(3.0000004) == 3);
    CHECK(ceil_bound(3.1) == 4);
    CHECK(ceil_bound(-0.5) == 0);
    CHECK(ceil_bound(0.0) == 0);
}

TEST_CASE("zero rounds leave the bound and the model untouched") {
    Graph g = fixtures::c5();
    ModelSpec model = build_formulation(g, 2, 4);
    std::size_t rows_before = model.rows.size();
    CutLoopReport rep = cutting_plane(g, model, Strategy::s4, 0);
    CHECK(rep.lb_trajectory.size() == 1);
    CHECK(rep.total_cuts == 0);
    CHECK(rep.rounds_run == 0);
    CHECK(rep.impr == 0);
    CHECK(model.rows.size() == rows_before);
}

TEST_CASE("bipartite fixture starts at its optimum so nothing improves") {
    Graph g = fixtures::k33();
    ModelSpec model = build_formulation(g, 2, 3);
    CutLoopReport rep = cutting_plane(g, model, Strategy::s4);
    REQUIRE(rep.lb_trajectory.size() == 31);
    CHECK(rep.lb_trajectory.front() == doctest::Approx(2.0));
    CHECK(rep.impr == 0);
    CHECK(trajectory_monotone(rep.lb_trajectory));
}

TEST_CASE("cut rounds record violated rows and never lower the bound") {
    Graph g = random_graph(12, 50, 3);
    Graph gl = g.relabeled(label_vertices(g));
    int lb = lower_bound(gl);
    auto [ub, naive] = naive_upper_bound(gl);
    REQUIRE(lb < ub);
    ModelSpec model = build_formulation(gl, lb, ub);
    std::size_t rows_before = model.rows.size();
    CutLoopReport rep = cutting_plane(gl, model, Strategy::s4);
    REQUIRE(rep.lb_trajectory.size() == 31);
    CHECK(trajectory_monotone(rep.lb_trajectory));
    CHECK(rep.impr >= 0);
    CHECK(rep.lb_trajectory.front() >= lb - 1e-6);
    CHECK(rep.total_cuts == static_cast<long>(rep.cuts.size()));
    CHECK(model.rows.size() >= rows_before + rep.cuts.size());
    for (const EmittedCut& c : rep.cuts) {
        CHECK(c.violation > 1e-5);
        CHECK(c.round >= 1);
        CHECK(c.round <= 30);
    }
    CHECK(rep.cuts_to_best <= rep.total_cuts);
    CHECK(rep.time_to_best >= 0.0);
}

TEST_CASE("root bound that rounds to the incumbent prunes immediately") {
    Graph g = fixtures::c5();
    ModelSpec model = build_formulation(g, 2, 3);
    auto [k, naive] = naive_upper_bound(g);
    REQUIRE(k == 3);
    SolveReport rep = branch_and_bound(g, model, naive);
    CHECK(rep.status == SolveStatus::optimal);
    CHECK(rep.chi_eq == 3);
    CHECK(rep.nodes == 1);
    REQUIRE(rep.incumbent.has_value());
    CHECK(is_equitable(g, *rep.incumbent));
}

TEST_CASE("fixture instances solve through the full pipeline") {
    SUBCASE("complete bipartite") {
        Graph g = fixtures::k33();
        check_optimal(cut_and_branch(g, Strategy::s4), g, 2);
    }
    SUBCASE("five cycle") {
        Graph g = fixtures::c5();
        check_optimal(cut_and_branch(g, Strategy::s4), g, 3);
    }
    SUBCASE("star with a path") {
        Graph g = fixtures::star_path();
        check_optimal(cut_and_branch(g, Strategy::s4), g, 3);
    }
    SUBCASE("joined cycle with a tail") {
        Graph g = fixtures::joined_cycle_tail();
        check_optimal(cut_and_branch(g, Strategy::s4), g, 5);
    }
}

TEST_CASE("graphs outside the reduction assumptions are pre-solved") {
    SUBCASE("no edges") {
        Graph g(6, {});
        SolveReport rep = cut_and_branch(g, Strategy::s4);
        check_optimal(rep, g, 1);
        CHECK(rep.nodes == 0);
        CHECK(rep.labeling.empty());
    }
    SUBCASE("four-vertex path") {
        Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
        check_optimal(cut_and_branch(g, Strategy::s4), g, 2);
    }
    SUBCASE("wheel has a universal hub") {
        Graph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                    {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
        SolveReport rep = cut_and_branch(g, Strategy::s4);
        check_optimal(rep, g, 4);
        CHECK(rep.chi_eq == oracle(g).chi_eq);
    }
    SUBCASE("complete graph") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v) edges.emplace_back(u, v);
        Graph g(5, edges);
        check_optimal(cut_and_branch(g, Strategy::s4), g, 5);
    }
    SUBCASE("complete graph plus an isolated vertex") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v) edges.emplace_back(u, v);
        Graph g(6, edges);
        SolveReport rep = cut_and_branch(g, Strategy::s4);
        check_optimal(rep, g, 5);
        CHECK(rep.chi_eq == oracle(g).chi_eq);
    }
}

TEST_CASE("pipeline agrees with the oracle on random graphs") {
    int densities[] = {10, 30, 50, 70, 90};
    for (int seed = 1; seed <= 25; ++seed) {
        int n = 5 + (seed % 4);
        int d = densities[seed % 5];
        Graph g = random_graph(n, d, static_cast<std::uint64_t>(seed));
        CAPTURE(seed);
        CAPTURE(n);
        CAPTURE(d);
        SolveReport rep = cut_and_branch(g, Strategy::s4);
        OracleResult truth = oracle(g);
        CHECK(rep.status == SolveStatus::optimal);
        CHECK(rep.chi_eq == truth.chi_eq);
        REQUIRE(rep.incumbent.has_value());
        CHECK(is_equitable(g, *rep.incumbent));
    }
}

TEST_CASE("emitted cuts are valid on the relabeled graph") {
    Graph g = random_graph(7, 60, 5);
    SolveReport rep = cut_and_branch(g, Strategy::s7);
    REQUIRE(!rep.labeling.empty());
    Graph gl = g.relabeled(rep.labeling);
    for (const EmittedCut& c : rep.root.cuts)
        CHECK(max_violation_over_eqcols(c.row, gl) <= 1e-9);
}

TEST_CASE("a zero node cap reports the limit with the greedy incumbent") {
    Graph g = fixtures::joined_cycle_tail();
    SolveLimits limits;
    limits.node_cap = 0;
    SolveReport rep = cut_and_branch(g, Strategy::s4, limits);
    CHECK(rep.status == SolveStatus::time_limit);
    CHECK(rep.nodes == 0);
    REQUIRE(rep.incumbent.has_value());
    CHECK(rep.incumbent->num_colors() == 5);
    CHECK(is_equitable(g, *rep.incumbent));
}

TEST_CASE("repeated solves are bit-identical") {
    Graph g = random_graph(9, 40, 11);
    SolveReport a = cut_and_branch(g, Strategy::s4);
    SolveReport b = cut_and_branch(g, Strategy::s4);
    CHECK(a.chi_eq == b.chi_eq);
    CHECK(a.nodes == b.nodes);
    CHECK(a.root.lb_trajectory == b.root.lb_trajectory);
    CHECK(a.root.total_cuts == b.root.total_cuts);
    REQUIRE(a.incumbent.has_value());
    REQUIRE(b.incumbent.has_value());
    CHECK(*a.incumbent == *b.incumbent);
}

} // TEST_SUITE
