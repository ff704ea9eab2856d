// Linear programming layer. The embedded engine is a dense bounded-variable
// primal simplex over an active row subset: rows marked lazy (the edge rows
// of large models) sit in a pool and are activated on violation, so the
// returned point always satisfies every row. Warm restarts after adding
// rows or changing bounds run a composite phase one from the current basis.
//
// An external engine can be plugged through a command that is invoked as
//   <command> <problem-file> <solution-file>
// with the text formats documented next to write_lp_file below.
#ifndef EQCOL_LP_HPP
#define EQCOL_LP_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "eqcol/model.hpp"

namespace eqcol {

enum class LpStatus { optimal, infeasible, iteration_limit };

struct LPOutcome {
    LpStatus status = LpStatus::iteration_limit;
    FracPoint point;
    double objective = std::numeric_limits<double>::infinity();
    // A valid lower bound on the LP optimum: the objective when optimal,
    // -infinity otherwise.
    double dual_bound = -std::numeric_limits<double>::infinity();
    long iterations = 0;
};

struct LpEngineConfig {
    enum class Kind { embedded, external_command };
    Kind kind = Kind::embedded;
    std::string command;              // external engine executable
    std::string work_dir = "/tmp";    // where problem/solution files go
};

// Engine used by solvers constructed without an explicit config. Set it
// once at startup, before solves run on other threads.
void set_default_lp_engine(LpEngineConfig cfg);
const LpEngineConfig& default_lp_engine();

// Generic dense bounded simplex. Columns carry finite or one-sided bounds;
// rows are kept in a pool and solved over an active subset.
class SimplexLp {
public:
    SimplexLp(std::vector<double> obj, std::vector<ColumnBounds> bounds);

    // Returns the pool id. Lazy rows start inactive and are activated when
    // the current point violates them.
    int add_row(const LinRow& row, bool lazy = false);

    void set_bound(int col, double lo, double hi);

    // Declares a starting point with every structural variable at one of
    // its bounds; slacks start basic. Throws if some value is interior.
    void set_start(const std::vector<double>& z);

    struct Result {
        LpStatus status = LpStatus::iteration_limit;
        double objective = 0.0;
        long iterations = 0;
    };
    Result solve();

    const std::vector<double>& solution() const { return z_; }
    double row_activity(int pool_id) const;
    int num_active_rows() const { return static_cast<int>(active_.size()); }

private:
    struct PoolRow {
        std::vector<Term> terms;
        double rhs = 0.0;
        RowSense sense = RowSense::le;
        RowKind kind = RowKind::other;
        bool lazy = false;
        double slack_lo = 0.0, slack_hi = 0.0;
    };
    enum class VStat : unsigned char { basic, at_lower, at_upper };

    void build_tableau_from_start();
    void append_active(int pool_id);
    void compact_active();
    void refactorize();
    void reset_basis_to_slacks();
    double infeasibility() const;
    void refresh_reduced_costs();
    void pivot(int row, int col, double enter_step, int leaving_stat);
    bool ratio_test(int q, bool phase_one, double& t, int& leave_row, int& leave_stat);
    bool phase_one(long& iters);
    bool phase_two(long& iters);
    double var_lo(int id) const;
    double var_hi(int id) const;
    double nonbasic_value(int id) const;
    void assemble_solution();
    int slack_id(int slot) const { return ncols_ + slot; }

    int ncols_ = 0;
    std::vector<double> c_;
    std::vector<ColumnBounds> col_bounds_;
    std::vector<PoolRow> pool_;
    std::vector<int> active_;          // pool ids by active slot
    std::vector<int> slot_of_pool_;    // -1 when inactive

    Eigen::MatrixXd T_;                // m x (ncols + m)
    Eigen::RowVectorXd d_;             // reduced costs, phase-two
    Eigen::VectorXd xB_;               // basic values by tableau row
    std::vector<int> basic_;           // var id per tableau row
    std::vector<VStat> vstat_;         // per var id
    std::vector<int> vpos_;            // var id -> tableau row when basic
    std::vector<double> z_;            // structural solution
    bool tableau_ready_ = false;
    bool costs_ready_ = false;
    long degenerate_run_ = 0;
    bool bland_ = false;
    long total_iterations_ = 0;
    long pivots_since_refactor_ = 0;
};

// Stateful model-space solver; keeps engine state across resolves so cut
// rounds and branching warm-start.
class LpSolver {
public:
    // The one-argument form picks up default_lp_engine().
    explicit LpSolver(const ModelSpec& model);
    LpSolver(const ModelSpec& model, LpEngineConfig cfg);
    ~LpSolver();

    // Optional warm start from a feasible 0/1 point (vertex colors of a
    // known equitable coloring in model space).
    void set_start_coloring(const std::vector<int>& colors, int k);

    LPOutcome solve();
    LPOutcome resolve_with_rows(const std::vector<LinRow>& rows);
    void set_column_bounds(int col, double lo, double hi);

    const ModelSpec& model() const { return model_; }

private:
    LPOutcome run_external();
    ModelSpec model_;
    LpEngineConfig cfg_;
    std::unique_ptr<SimplexLp> engine_;
    std::vector<LinRow> extra_rows_;   // cuts added so far (external engine re-sends)
    std::vector<std::pair<int, ColumnBounds>> bound_overrides_;
};

// One-shot convenience wrapper.
LPOutcome solve_lp(const ModelSpec& model, const LpEngineConfig& cfg = {});

// Problem file: "cols N", an objective line, "bounds" with N "lo hi" lines
// (-inf/inf allowed), "rows M" with one "<sense> <rhs> <nnz> col:coef ..."
// line per row (sense in {<=,>=,=}), "end".
void write_lp_file(const ModelSpec& model, const std::vector<LinRow>& extra,
                   const std::vector<std::pair<int, ColumnBounds>>& bound_overrides,
                   std::ostream& out);

// Solution file: "status optimal|infeasible|iteration-limit", "objective v",
// "values" followed by N numbers.
LPOutcome parse_solution_file(std::istream& in, const ModelSpec& model);

} // namespace eqcol

#endif
