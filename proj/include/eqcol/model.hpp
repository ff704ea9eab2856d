// The integer programming formulation over colors 1..ub: column layout,
// base rows, the lazy representative rows, and projection of full-space
// rows into the reduced column space.
//
// Base rows, for a graph on n vertices with color budget lb..ub and the
// dummy w_{ub+1} = 0:
//   assign     sum_j x_vj = 1                                per vertex
//   edge       x_uj + x_vj <= w_j                            per edge, color
//   order      w_{j+1} <= w_j                                j < ub
//   isolated   x_vj <= w_j                                   isolated v, color
//   eq_lower   sum_v x_vj >= sum_{k=j..ub} floor(n/k) (w_k - w_{k+1})
//   eq_upper   sum_v x_vj <= sum_{k=j..ub} ceil(n/k) (w_k - w_{k+1})
// with the equity rows ranging over j = 1..min(ub, n-1). Label-based
// fixings x_vj = 0 for v < j and w_j = 1 for j <= lb are column bounds,
// not rows. The representative rows
//   repr       x_vj <= sum_{u=j-1..v-1} x_{u,j-1}            2 <= j <= v
// are generated lazily on violation.
#ifndef EQCOL_MODEL_HPP
#define EQCOL_MODEL_HPP

#include <Eigen/Core>
#include <vector>

#include "eqcol/graph.hpp"

namespace eqcol {

enum class RowSense { le, ge, eq };
enum class RowKind { assign, edge, order, isolated, eq_lower, eq_upper, repr, cut, other };

struct Term {
    int col;
    double coef;
};

struct LinRow {
    std::vector<Term> terms;
    double rhs = 0.0;
    RowSense sense = RowSense::le;
    RowKind kind = RowKind::other;
    int p1 = 0, p2 = 0; // kind parameters: vertex/color or edge endpoint ids
};

// Column layout: x_vj at (v-1)*ub + (j-1) for 1 <= j <= ub, then w_j at
// n*ub + (j-1).
struct VarIndex {
    int n = 0;
    int ub = 0;
    int x(int v, int j) const { return (v - 1) * ub + (j - 1); }
    int w(int j) const { return n * ub + (j - 1); }
    int num_cols() const { return n * ub + ub; }
    bool is_x(int col) const { return col < n * ub; }
    int x_vertex(int col) const { return col / ub + 1; }
    int x_color(int col) const { return col % ub + 1; }
    int w_color(int col) const { return col - n * ub + 1; }
};

struct ColumnBounds {
    double lo = 0.0;
    double hi = 1.0;
};

struct ModelSpec {
    int n = 0;
    int lb = 1;
    int ub = 0;
    VarIndex vars;
    std::vector<double> obj;          // minimize obj . z
    std::vector<ColumnBounds> bounds; // per column; fixings are lo == hi
    std::vector<LinRow> rows;         // base formulation rows
};

// A fractional solution over the reduced space. Colors beyond ub read as
// zero, which matches the elimination semantics.
struct FracPoint {
    int n = 0;
    int lb = 1;
    int ub = 0;
    Eigen::MatrixXd x; // n rows, ub columns
    Eigen::VectorXd w; // ub entries
    double objective = 0.0;

    double x_of(int v, int j) const { return j <= ub ? x(v - 1, j - 1) : 0.0; }
    double w_of(int j) const { return j <= ub ? w(j - 1) : 0.0; }
    double col_value(int col) const {
        VarIndex vars{n, ub};
        return vars.is_x(col) ? x_of(vars.x_vertex(col), vars.x_color(col))
                              : w_of(vars.w_color(col));
    }
    double evaluate(const LinRow& row) const {
        double s = 0.0;
        for (const Term& t : row.terms)
            s += t.coef * col_value(t.col);
        return s;
    }

    static FracPoint from_values(const ModelSpec& model, const std::vector<double>& z);
};

// One term of a row written over the full color range 1..n; used by the
// cut families before projection.
struct SpaceTerm {
    bool is_w = false;
    int v = 0; // vertex for x terms, unused for w terms
    int j = 0; // color
    double coef = 0.0;
};

ModelSpec build_formulation(const Graph& g, int lb, int ub);

// The repr row for (v, j): x_vj - sum_{u=j-1..v-1} x_{u,j-1} <= 0.
LinRow repr_row(const VarIndex& vars, int v, int j);

// All repr rows violated by more than tol at the point.
std::vector<LinRow> lazy_violations(const ModelSpec& model, const FracPoint& point,
                                    double tol = 1e-6);

// Projects a full-space row into the model space: terms with color j > ub
// are dropped (those variables are fixed to zero), w_j terms with j <= lb
// are folded into the right-hand side at value one.
LinRow project_row(const std::vector<SpaceTerm>& terms, double rhs, RowSense sense,
                   const ModelSpec& model);

} // namespace eqcol

#endif
