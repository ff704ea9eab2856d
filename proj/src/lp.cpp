// Bounded-variable primal simplex with a full dense tableau over an active
// row subset, plus the external-command engine and the model-space facade.
//
// Invariants the engine maintains:
//   - every nonbasic variable sits exactly at one of its bounds,
//   - T = B^{-1} [A | I] over the active rows, xB holds the basic values,
//   - a point is reported optimal only when no pool row is violated, so
//     callers may rely on full feasibility of the returned point.
#include "eqcol/lp.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace eqcol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasTol = 1e-8;     // basic-value bound violations
constexpr double kCostTol = 1e-8;     // reduced-cost optimality threshold
constexpr double kPivotTol = 1e-9;    // smallest acceptable pivot element
constexpr double kZeroTol = 1e-11;    // column entries treated as zero
constexpr double kDegenStep = 1e-7;   // step lengths counted as stalling
constexpr double kPoolTol = 1e-7;     // pool-row violation before activation
constexpr long kMaxPivots = 120000;
constexpr long kRefactorEvery = 2000; // pivots between basis rebuilds

bool finite(double v) { return std::isfinite(v); }

} // namespace

SimplexLp::SimplexLp(std::vector<double> obj, std::vector<ColumnBounds> bounds)
    : ncols_(static_cast<int>(obj.size())), c_(std::move(obj)), col_bounds_(std::move(bounds)) {
    if (static_cast<int>(col_bounds_.size()) != ncols_)
        throw std::invalid_argument("lp: objective and bounds sizes differ");
    z_.assign(ncols_, 0.0);
    for (int j = 0; j < ncols_; ++j) {
        const auto& b = col_bounds_[j];
        if (b.lo > b.hi)
            throw std::invalid_argument("lp: empty column bound range");
        if (finite(b.lo)) z_[j] = b.lo;
        else if (finite(b.hi)) z_[j] = b.hi;
        else throw std::invalid_argument("lp: free columns are not supported");
    }
}

int SimplexLp::add_row(const LinRow& row, bool lazy) {
    PoolRow pr;
    pr.terms = row.terms;
    pr.rhs = row.rhs;
    pr.sense = row.sense;
    pr.kind = row.kind;
    pr.lazy = lazy;
    switch (row.sense) {
        case RowSense::le: pr.slack_lo = 0.0; pr.slack_hi = kInf; break;
        case RowSense::ge: pr.slack_lo = -kInf; pr.slack_hi = 0.0; break;
        case RowSense::eq: pr.slack_lo = 0.0; pr.slack_hi = 0.0; break;
    }
    for (const auto& t : pr.terms)
        if (t.col < 0 || t.col >= ncols_)
            throw std::invalid_argument("lp: row references unknown column");
    int id = static_cast<int>(pool_.size());
    pool_.push_back(std::move(pr));
    slot_of_pool_.push_back(-1);
    if (!lazy && tableau_ready_) {
        assemble_solution();
        append_active(id);
    }
    return id;
}

double SimplexLp::var_lo(int id) const {
    if (id < ncols_) return col_bounds_[id].lo;
    return pool_[active_[id - ncols_]].slack_lo;
}

double SimplexLp::var_hi(int id) const {
    if (id < ncols_) return col_bounds_[id].hi;
    return pool_[active_[id - ncols_]].slack_hi;
}

double SimplexLp::nonbasic_value(int id) const {
    return vstat_[id] == VStat::at_upper ? var_hi(id) : var_lo(id);
}

void SimplexLp::set_bound(int col, double lo, double hi) {
    if (col < 0 || col >= ncols_) throw std::invalid_argument("lp: bad column index");
    if (lo > hi) throw std::invalid_argument("lp: empty column bound range");
    if (!tableau_ready_) {
        col_bounds_[col] = {lo, hi};
        z_[col] = finite(lo) ? lo : hi;
        return;
    }
    if (vstat_[col] == VStat::basic) {
        col_bounds_[col] = {lo, hi};  // phase one repairs if needed
        return;
    }
    double old = nonbasic_value(col);  // read against the bounds being replaced
    col_bounds_[col] = {lo, hi};
    double snapped;
    if (finite(lo) && finite(hi))
        snapped = std::abs(old - lo) <= std::abs(old - hi) ? lo : hi;
    else
        snapped = finite(lo) ? lo : hi;
    vstat_[col] = snapped == lo ? VStat::at_lower : VStat::at_upper;
    double shift = snapped - old;
    if (shift != 0.0) xB_ -= shift * T_.col(col);
}

void SimplexLp::set_start(const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != ncols_)
        throw std::invalid_argument("lp: start point has wrong size");
    for (int j = 0; j < ncols_; ++j) {
        const auto& b = col_bounds_[j];
        bool at_lo = finite(b.lo) && std::abs(z[j] - b.lo) <= 1e-9;
        bool at_hi = finite(b.hi) && std::abs(z[j] - b.hi) <= 1e-9;
        if (!at_lo && !at_hi)
            throw std::invalid_argument("lp: start value away from both bounds");
    }
    z_ = z;
    tableau_ready_ = false;
    costs_ready_ = false;
}

void SimplexLp::build_tableau_from_start() {
    active_.clear();
    std::fill(slot_of_pool_.begin(), slot_of_pool_.end(), -1);
    for (int id = 0; id < static_cast<int>(pool_.size()); ++id)
        if (!pool_[id].lazy) {
            slot_of_pool_[id] = static_cast<int>(active_.size());
            active_.push_back(id);
        }
    int m = static_cast<int>(active_.size());
    T_.setZero(m, ncols_ + m);
    xB_.setZero(m);
    basic_.assign(m, 0);
    vstat_.assign(ncols_ + m, VStat::at_lower);
    vpos_.assign(ncols_ + m, -1);
    for (int j = 0; j < ncols_; ++j) {
        const auto& b = col_bounds_[j];
        bool at_lo = finite(b.lo) && std::abs(z_[j] - b.lo) <= 1e-9;
        vstat_[j] = at_lo ? VStat::at_lower : VStat::at_upper;
        z_[j] = at_lo ? b.lo : b.hi;
    }
    for (int s = 0; s < m; ++s) {
        const PoolRow& pr = pool_[active_[s]];
        double activity = 0.0;
        for (const auto& t : pr.terms) {
            T_(s, t.col) = t.coef;
            activity += t.coef * z_[t.col];
        }
        T_(s, ncols_ + s) = 1.0;
        basic_[s] = slack_id(s);
        vstat_[slack_id(s)] = VStat::basic;
        vpos_[slack_id(s)] = s;
        xB_(s) = pr.rhs - activity;
    }
    tableau_ready_ = true;
    costs_ready_ = false;
    degenerate_run_ = 0;
    bland_ = false;
    pivots_since_refactor_ = 0;
}

void SimplexLp::append_active(int pool_id) {
    const PoolRow& pr = pool_[pool_id];
    int m = static_cast<int>(active_.size());
    T_.conservativeResize(m + 1, ncols_ + m + 1);
    T_.col(ncols_ + m).setZero();
    T_.row(m).setZero();
    double activity = 0.0;
    for (const auto& t : pr.terms) {
        T_(m, t.col) = t.coef;
        activity += t.coef * z_[t.col];
    }
    T_(m, ncols_ + m) = 1.0;
    // Express the new row in the current basis: subtract multiples of the
    // tableau rows of the structural basics the row touches.
    for (int i = 0; i < m; ++i) {
        int id = basic_[i];
        if (id >= ncols_) continue;
        double coef = T_(m, id);
        if (coef != 0.0) T_.row(m) -= coef * T_.row(i);
    }
    xB_.conservativeResize(m + 1);
    xB_(m) = pr.rhs - activity;
    basic_.push_back(slack_id(m));
    vstat_.push_back(VStat::basic);
    vpos_.push_back(m);
    slot_of_pool_[pool_id] = m;
    active_.push_back(pool_id);
    costs_ready_ = false;
}

void SimplexLp::compact_active() {
    int m = static_cast<int>(active_.size());
    long target = std::max(2L * ncols_, 300L);
    if (m <= std::max(3L * ncols_, 500L)) return;
    std::vector<std::pair<double, int>> removable;  // (slack value, slot)
    for (int s = 0; s < m; ++s) {
        const PoolRow& pr = pool_[active_[s]];
        if (!pr.lazy || pr.kind != RowKind::edge) continue;
        int sid = slack_id(s);
        if (vstat_[sid] != VStat::basic) continue;
        double sv = xB_(vpos_[sid]);
        if (sv > 1e-5) removable.push_back({sv, s});
    }
    long excess = m - target;
    if (excess <= 0 || removable.empty()) return;
    std::sort(removable.begin(), removable.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (static_cast<long>(removable.size()) > excess) removable.resize(excess);
    std::vector<char> drop_slot(m, 0);
    for (const auto& [sv, s] : removable) drop_slot[s] = 1;

    std::vector<int> keep_rows, keep_cols, new_slot(m, -1);
    keep_cols.reserve(ncols_ + m);
    for (int j = 0; j < ncols_; ++j) keep_cols.push_back(j);
    int ns = 0;
    for (int s = 0; s < m; ++s) {
        if (drop_slot[s]) continue;
        new_slot[s] = ns++;
        keep_cols.push_back(ncols_ + s);
    }
    for (int i = 0; i < m; ++i) {
        int id = basic_[i];
        if (id >= ncols_ && drop_slot[id - ncols_]) continue;
        keep_rows.push_back(i);
    }
    Eigen::MatrixXd T2(keep_rows.size(), keep_cols.size());
    for (size_t r = 0; r < keep_rows.size(); ++r)
        for (size_t c = 0; c < keep_cols.size(); ++c)
            T2(r, c) = T_(keep_rows[r], keep_cols[c]);
    T_ = std::move(T2);

    Eigen::VectorXd xB2(keep_rows.size());
    std::vector<int> basic2(keep_rows.size());
    for (size_t r = 0; r < keep_rows.size(); ++r) {
        xB2(r) = xB_(keep_rows[r]);
        int id = basic_[keep_rows[r]];
        basic2[r] = id < ncols_ ? id : ncols_ + new_slot[id - ncols_];
    }
    xB_ = std::move(xB2);
    basic_ = std::move(basic2);

    std::vector<int> active2;
    std::vector<VStat> vstat2(ncols_ + ns);
    for (int j = 0; j < ncols_; ++j) vstat2[j] = vstat_[j];
    for (int s = 0; s < m; ++s) {
        int id = active_[s];
        if (drop_slot[s]) { slot_of_pool_[id] = -1; continue; }
        slot_of_pool_[id] = new_slot[s];
        active2.push_back(id);
        vstat2[ncols_ + new_slot[s]] = vstat_[ncols_ + s];
    }
    active_ = std::move(active2);
    vstat_ = std::move(vstat2);
    vpos_.assign(ncols_ + ns, -1);
    for (size_t r = 0; r < basic_.size(); ++r) vpos_[basic_[r]] = static_cast<int>(r);
    costs_ready_ = false;
}

// Rebuilds T = B^{-1}[A|I] and the basic values from the recorded basis and
// fresh row data, discarding the error accumulated by in-place pivoting.
// Falls back to an all-slack basis when roundoff has driven the recorded
// basis singular.
void SimplexLp::refactorize() {
    int m = static_cast<int>(active_.size());
    pivots_since_refactor_ = 0;
    if (m == 0) return;

    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(m, ncols_ + m);
    Eigen::VectorXd rhs(m);
    for (int s = 0; s < m; ++s) {
        const PoolRow& pr = pool_[active_[s]];
        for (const auto& t : pr.terms) R(s, t.col) = t.coef;
        R(s, ncols_ + s) = 1.0;
        rhs(s) = pr.rhs;
    }
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = R.col(basic_[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) {
        reset_basis_to_slacks();
        return;
    }
    T_ = lu.solve(R);
    for (int i = 0; i < m; ++i) {
        T_.col(basic_[i]).setZero();
        T_(i, basic_[i]) = 1.0;
    }
    Eigen::VectorXd r = rhs;
    for (int id = 0; id < ncols_ + m; ++id) {
        if (vstat_[id] == VStat::basic) continue;
        double v = nonbasic_value(id);
        if (v != 0.0) r -= v * R.col(id);
    }
    xB_ = lu.solve(r);
    costs_ready_ = false;
}

// Snaps every structural variable to its nearest bound and restarts from the
// all-slack basis over the current active rows; phase one then repairs
// feasibility from scratch.
void SimplexLp::reset_basis_to_slacks() {
    int m = static_cast<int>(active_.size());
    for (int j = 0; j < ncols_; ++j) {
        double v = vstat_[j] == VStat::basic ? xB_(vpos_[j]) : nonbasic_value(j);
        const auto& b = col_bounds_[j];
        bool to_lo;
        if (finite(b.lo) && finite(b.hi))
            to_lo = std::abs(v - b.lo) <= std::abs(v - b.hi);
        else
            to_lo = finite(b.lo);
        vstat_[j] = to_lo ? VStat::at_lower : VStat::at_upper;
        z_[j] = to_lo ? b.lo : b.hi;
    }
    T_.setZero(m, ncols_ + m);
    xB_.setZero(m);
    basic_.assign(m, 0);
    vpos_.assign(ncols_ + m, -1);
    for (int s = 0; s < m; ++s) {
        const PoolRow& pr = pool_[active_[s]];
        double activity = 0.0;
        for (const auto& t : pr.terms) {
            T_(s, t.col) = t.coef;
            activity += t.coef * z_[t.col];
        }
        T_(s, ncols_ + s) = 1.0;
        basic_[s] = slack_id(s);
        vstat_[slack_id(s)] = VStat::basic;
        vpos_[slack_id(s)] = s;
        xB_(s) = pr.rhs - activity;
    }
    costs_ready_ = false;
    degenerate_run_ = 0;
    bland_ = false;
}

double SimplexLp::infeasibility() const {
    double total = 0.0;
    for (size_t i = 0; i < basic_.size(); ++i) {
        int id = basic_[i];
        double lo = var_lo(id), hi = var_hi(id);
        if (xB_(i) < lo) total += lo - xB_(i);
        else if (xB_(i) > hi) total += xB_(i) - hi;
    }
    return total;
}

void SimplexLp::refresh_reduced_costs() {
    int m = static_cast<int>(active_.size());
    d_.setZero(ncols_ + m);
    for (int j = 0; j < ncols_; ++j) d_(j) = c_[j];
    for (int i = 0; i < m; ++i) {
        int id = basic_[i];
        if (id < ncols_ && c_[id] != 0.0) d_ -= c_[id] * T_.row(i);
    }
    for (int i = 0; i < m; ++i) d_(basic_[i]) = 0.0;
    costs_ready_ = true;
}

void SimplexLp::pivot(int row, int col, double enter_step, int leaving_stat) {
    double new_value = nonbasic_value(col) + enter_step;
    if (enter_step != 0.0) xB_ -= enter_step * T_.col(col);
    int leaving = basic_[row];
    vstat_[leaving] = leaving_stat == 0 ? VStat::at_lower : VStat::at_upper;
    vpos_[leaving] = -1;

    double piv = T_(row, col);
    Eigen::VectorXd colq = T_.col(col);
    T_.row(row) /= piv;
    colq(row) = 0.0;
    T_.noalias() -= colq * T_.row(row);
    if (costs_ready_) {
        double dq = d_(col);
        if (dq != 0.0) d_ -= dq * T_.row(row);
        d_(col) = 0.0;
    }
    basic_[row] = col;
    vpos_[col] = row;
    vstat_[col] = VStat::basic;
    xB_(row) = new_value;
    ++pivots_since_refactor_;
}

// Finds the blocking event for entering column q. Returns true when a basic
// variable blocks (pivot); false when the entering variable flips to its
// opposite bound (leave_row == -2) or the direction is unblocked (-1).
bool SimplexLp::ratio_test(int q, bool phase1, double& t, int& leave_row, int& leave_stat) {
    double dir = vstat_[q] == VStat::at_lower ? 1.0 : -1.0;
    double range = var_hi(q) - var_lo(q);
    int m = static_cast<int>(active_.size());
    double best_t = kInf, best_delta = 0.0;
    int best_row = -1, best_stat = 0, best_id = 0;
    for (int i = 0; i < m; ++i) {
        double Tiq = T_(i, q);
        if (std::abs(Tiq) < kZeroTol) continue;
        double delta = dir * Tiq;
        int id = basic_[i];
        double lo = var_lo(id), hi = var_hi(id), v = xB_(i);
        double ti;
        int stat;
        if (phase1 && v < lo - kFeasTol) {
            if (delta >= 0.0) continue;          // moving further below
            ti = (v - lo) / delta;
            stat = 0;
        } else if (phase1 && v > hi + kFeasTol) {
            if (delta <= 0.0) continue;
            ti = (v - hi) / delta;
            stat = 1;
        } else if (delta > 0.0) {
            if (!finite(lo)) continue;
            ti = (v - lo) / delta;
            stat = 0;
        } else {
            if (!finite(hi)) continue;
            ti = (v - hi) / delta;
            stat = 1;
        }
        if (ti < 0.0) ti = 0.0;
        bool better;
        if (ti < best_t - 1e-9) better = true;
        else if (ti > best_t + 1e-9) better = false;
        else if (bland_) better = best_row < 0 || id < best_id;
        else better = std::abs(delta) > std::abs(best_delta);
        if (better) {
            best_t = ti;
            best_delta = delta;
            best_row = i;
            best_stat = stat;
            best_id = id;
        }
    }
    if (best_row >= 0 && (!finite(range) || best_t <= range + 1e-12)) {
        if (std::abs(T_(best_row, q)) < kPivotTol && finite(range) && range < best_t) {
            leave_row = -2;
            t = range;
            return false;
        }
        t = best_t;
        leave_row = best_row;
        leave_stat = best_stat;
        return true;
    }
    if (finite(range)) {
        leave_row = -2;  // bound flip
        t = range;
        return false;
    }
    leave_row = -1;  // unblocked ray
    t = kInf;
    return false;
}

bool SimplexLp::phase_one(long& iters) {
    int m = static_cast<int>(active_.size());
    if (m == 0) return true;
    Eigen::RowVectorXd d1(ncols_ + m);
    for (;;) {
        if (pivots_since_refactor_ >= kRefactorEvery) refactorize();
        m = static_cast<int>(active_.size());
        std::vector<int> below, above;
        for (int i = 0; i < m; ++i) {
            int id = basic_[i];
            if (xB_(i) < var_lo(id) - kFeasTol) below.push_back(i);
            else if (xB_(i) > var_hi(id) + kFeasTol) above.push_back(i);
        }
        if (below.empty() && above.empty()) return true;
        if (total_iterations_ >= kMaxPivots) return true;  // caller checks feasibility

        d1.setZero(ncols_ + m);
        for (int i : below) d1 += T_.row(i);
        for (int i : above) d1 -= T_.row(i);

        int q = -1;
        double best = 0.0;
        for (int j = 0; j < ncols_ + m; ++j) {
            if (vstat_[j] == VStat::basic) continue;
            if (var_lo(j) == var_hi(j)) continue;
            double dj = d1(j);
            bool eligible = (vstat_[j] == VStat::at_lower && dj < -kCostTol) ||
                            (vstat_[j] == VStat::at_upper && dj > kCostTol);
            if (!eligible) continue;
            if (bland_) { q = j; break; }
            if (std::abs(dj) > best) { best = std::abs(dj); q = j; }
        }
        if (q < 0) return false;  // stationary and still infeasible

        double t;
        int lr, lstat;
        bool event = ratio_test(q, true, t, lr, lstat);
        double dir = vstat_[q] == VStat::at_lower ? 1.0 : -1.0;
        if (event) {
            pivot(lr, q, dir * t, lstat);
        } else if (lr == -2) {
            xB_ -= dir * t * T_.col(q);
            vstat_[q] = vstat_[q] == VStat::at_lower ? VStat::at_upper : VStat::at_lower;
        } else {
            return false;  // unblocked improving ray should not happen here
        }
        ++iters;
        ++total_iterations_;
        if (t <= kDegenStep) {
            if (++degenerate_run_ > 2L * std::max(m, 1) && !bland_) {
                refactorize();
                bland_ = true;
            }
        } else {
            degenerate_run_ = 0;
            bland_ = false;
        }
    }
}

bool SimplexLp::phase_two(long& iters) {
    long steps = 0;
    for (;;) {
        if (pivots_since_refactor_ >= kRefactorEvery) refactorize();
        int m = static_cast<int>(active_.size());
        if (!costs_ready_ || (++steps & 255) == 0) refresh_reduced_costs();
        int q = -1;
        double best = 0.0;
        for (int j = 0; j < ncols_ + m; ++j) {
            if (vstat_[j] == VStat::basic) continue;
            if (var_lo(j) == var_hi(j)) continue;
            double dj = d_(j);
            bool eligible = (vstat_[j] == VStat::at_lower && dj < -kCostTol) ||
                            (vstat_[j] == VStat::at_upper && dj > kCostTol);
            if (!eligible) continue;
            if (bland_) { q = j; break; }
            if (std::abs(dj) > best) { best = std::abs(dj); q = j; }
        }
        if (q < 0) return true;
        if (total_iterations_ >= kMaxPivots) return false;

        double t;
        int lr, lstat;
        bool event = ratio_test(q, false, t, lr, lstat);
        double dir = vstat_[q] == VStat::at_lower ? 1.0 : -1.0;
        if (event) {
            pivot(lr, q, dir * t, lstat);
        } else if (lr == -2) {
            xB_ -= dir * t * T_.col(q);
            vstat_[q] = vstat_[q] == VStat::at_lower ? VStat::at_upper : VStat::at_lower;
        } else {
            return false;  // unbounded direction: bounded models never reach this
        }
        ++iters;
        ++total_iterations_;
        if (t <= kDegenStep) {
            if (++degenerate_run_ > 2L * std::max(m, 1) && !bland_) {
                refactorize();
                bland_ = true;
            }
        } else {
            degenerate_run_ = 0;
            bland_ = false;
        }
    }
}

void SimplexLp::assemble_solution() {
    for (int j = 0; j < ncols_; ++j)
        z_[j] = vstat_[j] == VStat::basic ? xB_(vpos_[j]) : nonbasic_value(j);
}

double SimplexLp::row_activity(int pool_id) const {
    const PoolRow& pr = pool_.at(pool_id);
    double a = 0.0;
    for (const auto& t : pr.terms) a += t.coef * z_[t.col];
    return a;
}

SimplexLp::Result SimplexLp::solve() {
    if (!tableau_ready_) build_tableau_from_start();
    total_iterations_ = 0;
    Result res;
    for (int outer = 0; outer < 500; ++outer) {
        bool feasible = false;
        for (int attempt = 0; attempt < 3; ++attempt) {
            if (attempt > 0) refactorize();
            bool p1 = phase_one(res.iterations);
            if (!p1 && total_iterations_ < kMaxPivots) {
                // Never trust an infeasible verdict from drifted numbers:
                // retry once on a freshly factorized basis.
                refactorize();
                p1 = phase_one(res.iterations);
            }
            if (!p1) {
                assemble_solution();
                res.status = total_iterations_ >= kMaxPivots ? LpStatus::iteration_limit
                                                             : LpStatus::infeasible;
                return res;
            }
            if (total_iterations_ >= kMaxPivots) {
                assemble_solution();
                res.status = LpStatus::iteration_limit;
                return res;
            }
            if (!phase_two(res.iterations)) {
                assemble_solution();
                res.status = LpStatus::iteration_limit;
                return res;
            }
            if (infeasibility() <= kFeasTol * (1.0 + xB_.size())) { feasible = true; break; }
        }
        assemble_solution();
        if (!feasible) {
            res.status = LpStatus::iteration_limit;
            return res;
        }
        compact_active();

        std::vector<std::pair<double, int>> violated;
        for (int id = 0; id < static_cast<int>(pool_.size()); ++id) {
            if (slot_of_pool_[id] >= 0) continue;
            const PoolRow& pr = pool_[id];
            double a = row_activity(id);
            double v = 0.0;
            if (pr.sense == RowSense::le) v = a - pr.rhs;
            else if (pr.sense == RowSense::ge) v = pr.rhs - a;
            else v = std::abs(a - pr.rhs);
            if (v > kPoolTol) violated.push_back({v, id});
        }
        if (violated.empty()) {
            res.status = LpStatus::optimal;
            double obj = 0.0;
            for (int j = 0; j < ncols_; ++j) obj += c_[j] * z_[j];
            res.objective = obj;
            return res;
        }
        std::sort(violated.begin(), violated.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        if (violated.size() > 500) violated.resize(500);
        for (const auto& [v, id] : violated) append_active(id);
    }
    res.status = LpStatus::iteration_limit;
    return res;
}

// ---------------------------------------------------------------------------

namespace {
LpEngineConfig g_default_engine;
} // namespace

void set_default_lp_engine(LpEngineConfig cfg) { g_default_engine = std::move(cfg); }

const LpEngineConfig& default_lp_engine() { return g_default_engine; }

LpSolver::LpSolver(const ModelSpec& model) : LpSolver(model, default_lp_engine()) {}

LpSolver::LpSolver(const ModelSpec& model, LpEngineConfig cfg)
    : model_(model), cfg_(std::move(cfg)) {
    if (cfg_.kind == LpEngineConfig::Kind::embedded) {
        engine_ = std::make_unique<SimplexLp>(model_.obj, model_.bounds);
        bool lazy_edges = model_.rows.size() > 900;
        for (const auto& row : model_.rows)
            engine_->add_row(row, lazy_edges && row.kind == RowKind::edge);
    }
}

LpSolver::~LpSolver() = default;

void LpSolver::set_start_coloring(const std::vector<int>& colors, int k) {
    int n = model_.n;
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("lp: start coloring has wrong size");
    if (k > model_.ub)
        throw std::invalid_argument("lp: start coloring uses too many colors");
    // Relabel classes by increasing least vertex so that vertex v never gets
    // a class index above v, matching the fixed upper-triangular zeros.
    std::vector<int> least(k + 1, n + 1);
    for (int v = 1; v <= n; ++v)
        least[colors[v - 1]] = std::min(least[colors[v - 1]], v);
    std::vector<int> order(k);
    for (int j = 0; j < k; ++j) order[j] = j + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return least[a] < least[b]; });
    std::vector<int> newc(k + 1, 0);
    for (int j = 0; j < k; ++j) newc[order[j]] = j + 1;

    std::vector<double> z(model_.vars.num_cols(), 0.0);
    for (int v = 1; v <= n; ++v) z[model_.vars.x(v, newc[colors[v - 1]])] = 1.0;
    for (int j = 1; j <= k; ++j) z[model_.vars.w(j)] = 1.0;
    if (engine_) engine_->set_start(z);
}

LPOutcome LpSolver::solve() {
    if (cfg_.kind == LpEngineConfig::Kind::external_command) return run_external();
    auto r = engine_->solve();
    LPOutcome out;
    out.status = r.status;
    out.iterations = r.iterations;
    const auto& z = engine_->solution();
    out.point = FracPoint::from_values(model_, z);
    if (r.status == LpStatus::optimal) {
        out.objective = r.objective;
        out.dual_bound = r.objective;
    }
    return out;
}

LPOutcome LpSolver::resolve_with_rows(const std::vector<LinRow>& rows) {
    for (const auto& row : rows) {
        extra_rows_.push_back(row);
        if (engine_) engine_->add_row(row, false);
    }
    return solve();
}

void LpSolver::set_column_bounds(int col, double lo, double hi) {
    auto it = std::find_if(bound_overrides_.begin(), bound_overrides_.end(),
                           [col](const auto& o) { return o.first == col; });
    if (it != bound_overrides_.end())
        it->second = {lo, hi};
    else
        bound_overrides_.push_back({col, {lo, hi}});
    if (engine_) engine_->set_bound(col, lo, hi);
}

LPOutcome LpSolver::run_external() {
    // Unique per call across concurrent solver instances.
    static std::atomic<long> file_counter{0};
    std::ostringstream base;
    base << cfg_.work_dir << "/eqcol_lp_" << ::getpid() << "_" << file_counter.fetch_add(1);
    std::string in_path = base.str() + ".lp";
    std::string out_path = base.str() + ".sol";
    {
        std::ofstream out(in_path);
        if (!out) throw std::runtime_error("lp: cannot write " + in_path);
        write_lp_file(model_, extra_rows_, bound_overrides_, out);
    }
    std::string cmd = cfg_.command + " " + in_path + " " + out_path;
    int rc = std::system(cmd.c_str());
    if (rc != 0)
        throw std::runtime_error("lp: external engine exited with status " + std::to_string(rc));
    std::ifstream in(out_path);
    if (!in) throw std::runtime_error("lp: external engine produced no solution file");
    LPOutcome out = parse_solution_file(in, model_);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    if (out.status != LpStatus::optimal) return out;

    std::vector<double> z(model_.vars.num_cols());
    for (int v = 1; v <= model_.n; ++v)
        for (int j = 1; j <= model_.ub; ++j) z[model_.vars.x(v, j)] = out.point.x(v - 1, j - 1);
    for (int j = 1; j <= model_.ub; ++j) z[model_.vars.w(j)] = out.point.w(j - 1);
    auto check = [&](const LinRow& row) {
        double a = 0.0;
        for (const auto& t : row.terms) a += t.coef * z[t.col];
        double slack = row.rhs - a;
        bool ok = row.sense == RowSense::le   ? slack >= -1e-6
                  : row.sense == RowSense::ge ? slack <= 1e-6
                                              : std::abs(slack) <= 1e-6;
        if (!ok) throw std::runtime_error("lp: external solution violates a row");
    };
    for (const auto& row : model_.rows) check(row);
    for (const auto& row : extra_rows_) check(row);
    return out;
}

LPOutcome solve_lp(const ModelSpec& model, const LpEngineConfig& cfg) {
    LpSolver solver(model, cfg);
    return solver.solve();
}

void write_lp_file(const ModelSpec& model, const std::vector<LinRow>& extra,
                   const std::vector<std::pair<int, ColumnBounds>>& bound_overrides,
                   std::ostream& out) {
    auto num = [](double v) -> std::string {
        if (v == kInf) return "inf";
        if (v == -kInf) return "-inf";
        std::ostringstream s;
        s << std::setprecision(17) << v;
        return s.str();
    };
    int ncols = model.vars.num_cols();
    std::vector<ColumnBounds> bounds = model.bounds;
    for (const auto& [col, b] : bound_overrides) bounds[col] = b;
    out << "# eqcol lp 1\n";
    out << "cols " << ncols << "\n";
    out << "obj";
    for (double c : model.obj) out << " " << num(c);
    out << "\nbounds\n";
    for (const auto& b : bounds) out << num(b.lo) << " " << num(b.hi) << "\n";
    out << "rows " << model.rows.size() + extra.size() << "\n";
    auto emit = [&](const LinRow& row) {
        const char* s = row.sense == RowSense::le ? "<=" : row.sense == RowSense::ge ? ">=" : "=";
        out << s << " " << num(row.rhs) << " " << row.terms.size();
        for (const auto& t : row.terms) out << " " << t.col << ":" << num(t.coef);
        out << "\n";
    };
    for (const auto& row : model.rows) emit(row);
    for (const auto& row : extra) emit(row);
    out << "end\n";
}

LPOutcome parse_solution_file(std::istream& in, const ModelSpec& model) {
    LPOutcome out;
    std::string key;
    if (!(in >> key) || key != "status")
        throw std::runtime_error("lp: solution file missing status line");
    std::string status;
    in >> status;
    if (status == "optimal") out.status = LpStatus::optimal;
    else if (status == "infeasible") out.status = LpStatus::infeasible;
    else if (status == "iteration-limit") out.status = LpStatus::iteration_limit;
    else throw std::runtime_error("lp: unknown solution status '" + status + "'");
    if (out.status != LpStatus::optimal) return out;
    double file_obj;
    if (!(in >> key >> file_obj) || key != "objective")
        throw std::runtime_error("lp: solution file missing objective line");
    if (!(in >> key) || key != "values")
        throw std::runtime_error("lp: solution file missing values block");
    int ncols = model.vars.num_cols();
    std::vector<double> z(ncols);
    for (int j = 0; j < ncols; ++j)
        if (!(in >> z[j])) throw std::runtime_error("lp: truncated values block");
    out.point = FracPoint::from_values(model, z);
    double obj = 0.0;
    for (int j = 0; j < ncols; ++j) obj += model.obj[j] * z[j];
    out.objective = obj;
    out.dual_bound = obj;
    return out;
}

} // namespace eqcol
