#include "eqcol/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqcol {

ModelSpec build_formulation(const Graph& g, int lb, int ub) {
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("build_formulation: empty graph");
    if (lb < 1 || lb > ub || ub > n)
        throw std::invalid_argument("build_formulation: need 1 <= lb <= ub <= n");

    ModelSpec m;
    m.n = n;
    m.lb = lb;
    m.ub = ub;
    m.vars = VarIndex{n, ub};
    m.obj.assign(m.vars.num_cols(), 0.0);
    m.bounds.assign(m.vars.num_cols(), ColumnBounds{0.0, 1.0});

    for (int j = 1; j <= ub; ++j) {
        m.obj[m.vars.w(j)] = 1.0;
        if (j <= lb)
            m.bounds[m.vars.w(j)] = {1.0, 1.0};
    }
    // Label fixings: vertex v may only use colors 1..v.
    for (int v = 1; v <= n; ++v)
        for (int j = v + 1; j <= ub; ++j)
            m.bounds[m.vars.x(v, j)] = {0.0, 0.0};

    for (int v = 1; v <= n; ++v) {
        LinRow row;
        row.sense = RowSense::eq;
        row.rhs = 1.0;
        row.kind = RowKind::assign;
        row.p1 = v;
        for (int j = 1; j <= ub; ++j)
            row.terms.push_back({m.vars.x(v, j), 1.0});
        m.rows.push_back(std::move(row));
    }
    for (auto [u, v] : g.edges()) {
        for (int j = 1; j <= ub; ++j) {
            LinRow row;
            row.sense = RowSense::le;
            row.rhs = 0.0;
            row.kind = RowKind::edge;
            row.p1 = u;
            row.p2 = v;
            row.terms = {{m.vars.x(u, j), 1.0}, {m.vars.x(v, j), 1.0}, {m.vars.w(j), -1.0}};
            m.rows.push_back(std::move(row));
        }
    }
    for (int j = 1; j + 1 <= ub; ++j) {
        LinRow row;
        row.sense = RowSense::le;
        row.rhs = 0.0;
        row.kind = RowKind::order;
        row.p1 = j;
        row.terms = {{m.vars.w(j + 1), 1.0}, {m.vars.w(j), -1.0}};
        m.rows.push_back(std::move(row));
    }
    for (int v : g.isolated_vertices()) {
        for (int j = 1; j <= ub; ++j) {
            LinRow row;
            row.sense = RowSense::le;
            row.rhs = 0.0;
            row.kind = RowKind::isolated;
            row.p1 = v;
            row.p2 = j;
            row.terms = {{m.vars.x(v, j), 1.0}, {m.vars.w(j), -1.0}};
            m.rows.push_back(std::move(row));
        }
    }
    // Equity rows. The telescoped coefficient of w_k in
    // sum_{k=j..ub} f(k) (w_k - w_{k+1}) is f(j) at k = j and
    // f(k) - f(k-1) for k > j, with w_{ub+1} = 0.
    for (int pass = 0; pass < 2; ++pass) {
        bool lower = pass == 0;
        for (int j = 1; j <= std::min(ub, n - 1); ++j) {
            LinRow row;
            row.sense = lower ? RowSense::ge : RowSense::le;
            row.rhs = 0.0;
            row.kind = lower ? RowKind::eq_lower : RowKind::eq_upper;
            row.p1 = j;
            for (int v = 1; v <= n; ++v)
                row.terms.push_back({m.vars.x(v, j), 1.0});
            auto f = [&](int k) { return lower ? n / k : (n + k - 1) / k; };
            for (int k = j; k <= ub; ++k) {
                int coef = k == j ? f(k) : f(k) - f(k - 1);
                if (coef != 0)
                    row.terms.push_back({m.vars.w(k), -static_cast<double>(coef)});
            }
            m.rows.push_back(std::move(row));
        }
    }
    return m;
}

LinRow repr_row(const VarIndex& vars, int v, int j) {
    LinRow row;
    row.sense = RowSense::le;
    row.rhs = 0.0;
    row.kind = RowKind::repr;
    row.p1 = v;
    row.p2 = j;
    row.terms.push_back({vars.x(v, j), 1.0});
    for (int u = j - 1; u <= v - 1; ++u)
        row.terms.push_back({vars.x(u, j - 1), -1.0});
    return row;
}

FracPoint FracPoint::from_values(const ModelSpec& model, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != model.vars.num_cols())
        throw std::invalid_argument("model: value vector has wrong size");
    FracPoint p;
    p.n = model.n;
    p.lb = model.lb;
    p.ub = model.ub;
    p.x = Eigen::MatrixXd::Zero(model.n, model.ub);
    p.w = Eigen::VectorXd::Zero(model.ub);
    for (int v = 1; v <= model.n; ++v)
        for (int j = 1; j <= model.ub; ++j) p.x(v - 1, j - 1) = z[model.vars.x(v, j)];
    for (int j = 1; j <= model.ub; ++j) p.w(j - 1) = z[model.vars.w(j)];
    for (int j = 0; j < model.vars.num_cols(); ++j) p.objective += model.obj[j] * z[j];
    return p;
}

std::vector<LinRow> lazy_violations(const ModelSpec& model, const FracPoint& point, double tol) {
    std::vector<LinRow> out;
    for (int v = 2; v <= model.n; ++v) {
        for (int j = 2; j <= std::min(v, model.ub); ++j) {
            double lhs = point.x_of(v, j);
            for (int u = j - 1; u <= v - 1; ++u)
                lhs -= point.x_of(u, j - 1);
            if (lhs > tol)
                out.push_back(repr_row(model.vars, v, j));
        }
    }
    return out;
}

LinRow project_row(const std::vector<SpaceTerm>& terms, double rhs, RowSense sense,
                   const ModelSpec& model) {
    LinRow row;
    row.sense = sense;
    row.rhs = rhs;
    row.kind = RowKind::cut;
    for (const SpaceTerm& t : terms) {
        if (t.j > model.ub)
            continue;
        if (t.is_w && t.j <= model.lb) {
            row.rhs -= t.coef;
            continue;
        }
        row.terms.push_back({t.is_w ? model.vars.w(t.j) : model.vars.x(t.v, t.j), t.coef});
    }
    std::sort(row.terms.begin(), row.terms.end(),
              [](const Term& a, const Term& b) { return a.col < b.col; });
    return row;
}

} // namespace eqcol
