// Dimension and face verification over the hull of equitable colorings.
// Verdicts for n <= 8 come from full point enumeration and are exact. For
// larger graphs a budgeted generator produces face points two ways: by
// walking swap and color-introduction orbits around oracle witnesses, and
// by a backtracking search restricted to colorings whose row activity
// lands exactly on the face.

#include "eqcol/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eqcol {

namespace {

int dimension_from(const Graph& g, const OracleResult& orc) {
    int n = g.num_vertices();
    return n * n - (orc.chi_eq + static_cast<int>(orc.skip.size()) + 1);
}

// Rank of the coefficient matrix of the hull equations. Full row rank
// means the equations are independent, so the affine hull they cut out
// has exactly the dimension the formula claims.
int hull_equation_rank(int n, int chi_eq, const std::vector<int>& skip) {
    using Vec = RowBasis<mpq_class>::Vec;
    Eigen::Index cols = n * n + n;
    RowBasis<mpq_class> basis(cols);
    auto xcol = [n](int v, int j) { return (v - 1) * n + (j - 1); };
    auto wcol = [n](int j) { return n * n + (j - 1); };
    mpq_class zero(0);

    for (int v = 1; v <= n; ++v) {
        Vec row = Vec::Constant(cols, zero);
        for (int j = 1; j <= n; ++j)
            row(xcol(v, j)) = 1;
        basis.insert(std::move(row), zero);
    }
    for (int j = 1; j <= chi_eq; ++j) {
        Vec row = Vec::Constant(cols, zero);
        row(wcol(j)) = 1;
        basis.insert(std::move(row), zero);
    }
    for (int j : skip) {
        Vec row = Vec::Constant(cols, zero);
        row(wcol(j)) = 1;
        row(wcol(j + 1)) = -1;
        basis.insert(std::move(row), zero);
    }
    Vec last = Vec::Constant(cols, zero);
    for (int v = 1; v <= n; ++v)
        last(xcol(v, n)) = 1;
    last(wcol(n)) = -1;
    basis.insert(std::move(last), zero);

    return basis.rank();
}

AffineFamily build_witness_family(const Graph& g, const OracleResult& orc) {
    int n = g.num_vertices();
    if (orc.chi_eq < 2 || orc.chi_eq > n - 2)
        throw std::domain_error("dimension witness family: need 2 <= chi_eq <= n-2");

    int u1 = 0, u2 = 0;
    for (int a = 1; a <= n && u1 == 0; ++a)
        for (int b = a + 1; b <= n && u1 == 0; ++b)
            if (!g.adjacent(a, b)) {
                u1 = a;
                u2 = b;
            }
    if (u1 == 0)
        throw std::domain_error("dimension witness family: graph is complete");

    std::vector<int> colors(n, n - 1);
    int next = 1;
    for (int v = 1; v <= n; ++v)
        if (v != u1 && v != u2)
            colors[v - 1] = next++;
    EqColoring base(colors, n - 1);

    AffineFamily fam;
    auto push = [&fam](const EqColoring& c) { fam.points.push_back(to_binary(c)); };

    push(base);
    for (int j = 1; j <= n - 2; ++j)
        push(swap_classes(base, {n - 1, j}));

    EqColoring split = intro_color(base, u1);
    push(split);
    for (int j = 1; j <= n - 1; ++j)
        for (int jp = 1; jp <= n - 1; ++jp)
            if (jp != j)
                push(swap_classes(split, {n, j, jp}));
    for (int j = 1; j <= n - 1; ++j)
        push(swap_classes(split, {n, j}));

    for (int k = orc.chi_eq; k <= n - 2; ++k) {
        auto it = orc.witness.find(k);
        if (it != orc.witness.end())
            push(it->second);
    }

    fam.rank = affine_rank(fam.points);
    return fam;
}

// Row coefficients spread over dense x and w tables for quick lookups.
struct RowCoeffs {
    int n = 0;
    std::vector<double> ax; // (v-1)*n + (j-1)
    std::vector<double> aw; // j-1
};

RowCoeffs expand_terms(const CutRow& row) {
    RowCoeffs rc;
    rc.n = row.n;
    rc.ax.assign(static_cast<std::size_t>(row.n) * row.n, 0.0);
    rc.aw.assign(row.n, 0.0);
    for (const SpaceTerm& t : row.terms) {
        if (t.is_w)
            rc.aw[t.j - 1] += t.coef;
        else
            rc.ax[static_cast<std::size_t>(t.v - 1) * row.n + (t.j - 1)] += t.coef;
    }
    return rc;
}

// Every coefficient is an integer, so activities of binary points are
// integer-valued doubles and sign tests with a 0.5 margin are exact.
FaceVerdict enumerate_verdict(const Graph& g, const CutRow& row, int dim) {
    int n = g.num_vertices();
    FaceVerdict verdict;
    verdict.dim_ecp = dim;
    AffineRankAccumulator acc(n * n + n);
    for (const BinaryPoint& p : enumerate_binary_points(g)) {
        double act = row.violation(p);
        if (act > 0.5) {
            verdict.status = FaceStatus::invalid;
            verdict.achieved_rank = acc.rank();
            return verdict;
        }
        if (act < -0.5) {
            verdict.off_face_seen = true;
            continue;
        }
        if (acc.rank() <= dim)
            acc.insert(p);
    }
    verdict.achieved_rank = acc.rank();
    verdict.status = (acc.rank() == dim && verdict.off_face_seen) ? FaceStatus::facet_verified
                                                                  : FaceStatus::valid_face;
    return verdict;
}

// Backtracking over k-eqcols restricted to the face: a subtree is cut as
// soon as the reachable activity interval of the unassigned vertices no
// longer covers the equality target.
class FaceSearch {
public:
    FaceSearch(const Graph& g, const RowCoeffs& rc, int k)
        : g_(g), n_(g.num_vertices()), k_(k), floor_(n_ / k), big_total_(n_ % k),
          color_(n_ + 1, 0), size_(k + 1, 0) {
        double wact = 0.0;
        for (int j = 1; j <= k_; ++j)
            wact += rc.aw[j - 1];
        target_ = -wact;

        coef_.assign(static_cast<std::size_t>(n_) * k_, 0.0);
        smin_.assign(n_ + 2, 0.0);
        smax_.assign(n_ + 2, 0.0);
        for (int v = 1; v <= n_; ++v) {
            double lo = rc.ax[static_cast<std::size_t>(v - 1) * n_];
            double hi = lo;
            for (int j = 1; j <= k_; ++j) {
                double c = rc.ax[static_cast<std::size_t>(v - 1) * n_ + (j - 1)];
                coef_[static_cast<std::size_t>(v - 1) * k_ + (j - 1)] = c;
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            minc_.push_back(lo);
            maxc_.push_back(hi);
        }
        for (int v = n_; v >= 1; --v) {
            smin_[v] = smin_[v + 1] + minc_[v - 1];
            smax_[v] = smax_[v + 1] + maxc_[v - 1];
        }
    }

    // consider(c) ingests one face point; stop() ends the walk early.
    // work counts down across DFS nodes.
    template <typename Consider, typename Stop>
    void run(Consider&& consider, Stop&& stop, long* work) {
        deficit_ = k_ * floor_;
        bigs_ = 0;
        dfs(1, 0.0, consider, stop, work);
    }

private:
    template <typename Consider, typename Stop>
    void dfs(int v, double act, Consider& consider, Stop& stop, long* work) {
        if (stop() || --*work <= 0)
            return;
        if (v > n_) {
            consider(EqColoring(std::vector<int>(color_.begin() + 1, color_.end()), k_));
            return;
        }
        if (act + smin_[v] > target_ + 0.5 || act + smax_[v] < target_ - 0.5)
            return;
        int remaining = n_ - v;
        int cap = floor_ + (bigs_ < big_total_ ? 1 : 0);
        for (int j = 1; j <= k_; ++j) {
            if (size_[j] >= cap)
                continue;
            bool clash = false;
            for (int u : g_.neighbors(v))
                if (u < v && color_[u] == j) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            bool fills = size_[j] < floor_;
            bool grows_big = size_[j] == floor_;
            color_[v] = j;
            ++size_[j];
            if (fills)
                --deficit_;
            if (grows_big)
                ++bigs_;
            if (deficit_ <= remaining)
                dfs(v + 1, act + coef_[static_cast<std::size_t>(v - 1) * k_ + (j - 1)],
                    consider, stop, work);
            if (grows_big)
                --bigs_;
            if (fills)
                ++deficit_;
            --size_[j];
            color_[v] = 0;
            if (stop() || *work <= 0)
                return;
        }
    }

    const Graph& g_;
    int n_;
    int k_;
    int floor_;
    int big_total_;
    double target_ = 0.0;
    std::vector<int> color_;
    std::vector<int> size_;
    std::vector<double> coef_;
    std::vector<double> minc_, maxc_;
    std::vector<double> smin_, smax_;
    int deficit_ = 0;
    int bigs_ = 0;
};

FaceVerdict generated_verdict(const Graph& g, const CutRow& row, int dim, long effort,
                              const OracleResult& orc) {
    int n = g.num_vertices();
    FaceVerdict verdict;
    verdict.dim_ecp = dim;
    AffineRankAccumulator acc(n * n + n);
    std::set<BinaryPoint> seen;
    bool violated = false;
    long budget = effort;
    long work = 200 * effort;

    auto done = [&] { return violated || (acc.rank() == dim && verdict.off_face_seen); };
    auto exhausted = [&] { return budget <= 0 || work <= 0; };
    auto consider = [&](const EqColoring& c) {
        if (done() || exhausted())
            return;
        --work;
        BinaryPoint p = to_binary(c);
        if (!seen.insert(p).second)
            return;
        --budget;
        double act = row.violation(p);
        if (act > 0.5) {
            violated = true;
            return;
        }
        if (act < -0.5) {
            verdict.off_face_seen = true;
            return;
        }
        if (acc.rank() <= dim)
            acc.insert(p);
    };

    std::vector<EqColoring> seeds;
    for (const auto& kv : orc.witness)
        seeds.push_back(kv.second);
    for (const auto& [k, wit] : orc.witness) {
        if (k < (n + 1) / 2 || k > n - 1)
            continue;
        for (int j = 1; j <= k; ++j) {
            VertexSet cls = wit.color_class(j);
            if (cls.size() == 2) {
                seeds.push_back(intro_color(wit, cls[0]));
                seeds.push_back(intro_color(wit, cls[1]));
            }
        }
    }

    for (const EqColoring& s : seeds) {
        if (done() || exhausted())
            break;
        consider(s);
        int k = s.num_colors();
        for (int a = 1; a <= k && !done() && !exhausted(); ++a)
            for (int b = a + 1; b <= k; ++b)
                consider(swap_classes(s, {a, b}));
        for (int a = 1; a <= k && !done() && !exhausted(); ++a)
            for (int b = a + 1; b <= k; ++b)
                for (int c = b + 1; c <= k; ++c) {
                    consider(swap_classes(s, {a, b, c}));
                    consider(swap_classes(s, {a, c, b}));
                }
    }

    RowCoeffs rc = expand_terms(row);
    auto stop = [&] { return done() || budget <= 0; };
    for (const auto& kv : orc.witness) {
        if (stop() || work <= 0)
            break;
        FaceSearch search(g, rc, kv.first);
        search.run(consider, stop, &work);
    }

    verdict.achieved_rank = acc.rank();
    if (violated)
        verdict.status = FaceStatus::invalid;
    else if (acc.rank() == dim && verdict.off_face_seen)
        verdict.status = FaceStatus::facet_verified;
    else
        verdict.status = FaceStatus::rank_bound_reached;
    return verdict;
}

} // namespace

AffineRankAccumulator::AffineRankAccumulator(int coords)
    : coords_(coords), screen_(coords + 1), exact_(coords + 1) {}

bool AffineRankAccumulator::insert(const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != coords_)
        throw std::invalid_argument("affine rank: point has the wrong dimension");
    Eigen::VectorXd hd(coords_ + 1);
    hd(0) = 1.0;
    for (int i = 0; i < coords_; ++i)
        hd(i + 1) = point[i];
    Eigen::VectorXd probe = hd;
    if (screen_.reduce(probe, 1e-8) < 0)
        return false;
    RowBasis<mpq_class>::Vec hq(coords_ + 1);
    hq(0) = 1;
    for (int i = 0; i < coords_; ++i)
        hq(i + 1) = mpq_class(point[i]);
    if (!exact_.insert(std::move(hq), mpq_class(0)))
        return false;
    screen_.insert(std::move(hd), 1e-8);
    return true;
}

int affine_rank(const std::vector<BinaryPoint>& points) {
    if (points.empty())
        return 0;
    AffineRankAccumulator acc(points.front().dimension());
    for (const BinaryPoint& p : points)
        acc.insert(p);
    return acc.rank();
}

int ecp_dimension(const Graph& g) { return dimension_from(g, oracle(g)); }

bool satisfies_hull_equations(const BinaryPoint& p, int chi_eq, const std::vector<int>& skip) {
    int n = p.num_vertices();
    for (int v = 1; v <= n; ++v) {
        int s = 0;
        for (int j = 1; j <= n; ++j)
            s += p.x(v, j);
        if (s != 1)
            return false;
    }
    for (int j = 1; j <= chi_eq; ++j)
        if (p.w(j) != 1)
            return false;
    for (int j : skip)
        if (p.w(j) != p.w(j + 1))
            return false;
    int top = 0;
    for (int v = 1; v <= n; ++v)
        top += p.x(v, n);
    return top == p.w(n);
}

AffineFamily dimension_witness_family(const Graph& g) {
    return build_witness_family(g, oracle(g));
}

bool verify_dimension(const Graph& g) {
    OracleResult orc = oracle(g);
    int n = g.num_vertices();
    int dim = dimension_from(g, orc);
    int eq_rows = n + orc.chi_eq + static_cast<int>(orc.skip.size()) + 1;
    if (hull_equation_rank(n, orc.chi_eq, orc.skip) != eq_rows)
        return false;

    if (n <= 8) {
        AffineRankAccumulator acc(n * n + n);
        for (const BinaryPoint& p : enumerate_binary_points(g)) {
            if (!satisfies_hull_equations(p, orc.chi_eq, orc.skip))
                return false;
            if (acc.rank() <= dim)
                acc.insert(p);
        }
        return acc.rank() == dim + 1;
    }

    AffineFamily fam = build_witness_family(g, orc);
    for (const BinaryPoint& p : fam.points)
        if (!satisfies_hull_equations(p, orc.chi_eq, orc.skip))
            return false;
    return fam.rank == dim + 1;
}

const char* face_status_name(FaceStatus s) {
    switch (s) {
    case FaceStatus::invalid:
        return "invalid";
    case FaceStatus::valid_face:
        return "valid-face";
    case FaceStatus::facet_verified:
        return "facet-verified";
    case FaceStatus::rank_bound_reached:
        return "rank-bound-reached";
    }
    return "?";
}

FaceVerdict verify_face(const Graph& g, const CutRow& row, long effort) {
    OracleResult orc = oracle(g);
    int dim = dimension_from(g, orc);
    if (g.num_vertices() <= 8)
        return enumerate_verdict(g, row, dim);
    if (effort <= 0)
        effort = 50L * dim;
    return generated_verdict(g, row, dim, effort, orc);
}

bool face_dims_equal(const Graph& g, const CutRow& a, const CutRow& b, long effort) {
    return verify_face(g, a, effort).achieved_rank == verify_face(g, b, effort).achieved_rank;
}

std::string face_report(const std::string& graph_id, const CutRow& row, const FaceVerdict& v) {
    std::ostringstream os;
    os << graph_id << ": " << row.label << ": " << face_status_name(v.status) << ", rank "
       << v.achieved_rank << "/" << v.dim_ecp;
    return os.str();
}

} // namespace eqcol
