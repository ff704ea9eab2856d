#include "eqcol/cuts.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eqcol {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Accumulates coefficients, drops zeros, and emits sorted terms: w terms
// by color first, then x terms by (vertex, color).
class TermBuilder {
public:
    void x(int v, int j, double coef) { acc_[{0, v, j}] += coef; }
    void w(int j, double coef) { acc_[{1, 0, j}] += coef; }

    std::vector<SpaceTerm> take() {
        std::vector<SpaceTerm> out;
        for (const auto& [key, coef] : acc_) {
            if (coef == 0.0) continue;
            auto [is_w, v, j] = key;
            out.push_back({is_w == 1, v, j, coef});
        }
        std::sort(out.begin(), out.end(), [](const SpaceTerm& a, const SpaceTerm& b) {
            if (a.is_w != b.is_w) return a.is_w < b.is_w;
            if (a.v != b.v) return a.v < b.v;
            return a.j < b.j;
        });
        return out;
    }

private:
    std::map<std::tuple<int, int, int>, double> acc_;
};

std::string join(const VertexSet& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    return out.str();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error("cut: " + what);
}

void require_vertices(const Graph& g, const VertexSet& s, const std::string& name) {
    int prev = 0;
    for (int v : s) {
        require(v >= 1 && v <= g.num_vertices(), name + " vertex out of range");
        require(v > prev, name + " must be sorted and duplicate free");
        prev = v;
    }
}

} // namespace

const char* cut_family_name(CutFamily f) {
    switch (f) {
        case CutFamily::nonneg: return "nonneg";
        case CutFamily::block: return "block";
        case CutFamily::clique: return "clique";
        case CutFamily::rank: return "rank";
        case CutFamily::two_rank: return "two_rank";
        case CutFamily::subneighborhood: return "subneighborhood";
        case CutFamily::outside_neighborhood: return "outside_neighborhood";
        case CutFamily::clique_neighborhood: return "clique_neighborhood";
        case CutFamily::s_color: return "s_color";
    }
    return "?";
}

double CutRow::violation(const BinaryPoint& p) const {
    double s = 0.0;
    for (const SpaceTerm& t : terms)
        s += t.coef * (t.is_w ? p.w(t.j) : p.x(t.v, t.j));
    return s;
}

double CutRow::violation(const FracPoint& p) const {
    double s = 0.0;
    for (const SpaceTerm& t : terms)
        s += t.coef * (t.is_w ? p.w_of(t.j) : p.x_of(t.v, t.j));
    return s;
}

LinRow CutRow::project(const ModelSpec& model) const {
    return project_row(terms, 0.0, RowSense::le, model);
}

std::string CutRow::key() const {
    std::ostringstream out;
    for (const SpaceTerm& t : terms) {
        if (t.is_w) out << "w" << t.j;
        else out << "x" << t.v << "." << t.j;
        out << ":" << t.coef << "|";
    }
    return out.str();
}

CutRow nonneg_row(int v, int j, int n) {
    require(n >= 1, "nonneg needs a graph size");
    require(v >= 1 && v <= n, "nonneg vertex out of range");
    require(j >= 1 && j <= n, "nonneg color out of range");
    TermBuilder b;
    b.x(v, j, -1.0);
    CutRow row{CutFamily::nonneg, n, b.take(), {}};
    row.label = "nonneg(v=" + std::to_string(v) + ",j=" + std::to_string(j) + ")";
    return row;
}

CutRow block_cut(int v, int j, int n) {
    require(n >= 1, "block needs a graph size");
    require(v >= 1 && v <= n, "block vertex out of range");
    require(j >= 1 && j <= n, "block color out of range");
    TermBuilder b;
    for (int k = j; k <= n; ++k) b.x(v, k, 1.0);
    b.w(j, -1.0);
    CutRow row{CutFamily::block, n, b.take(), {}};
    row.label = "block(v=" + std::to_string(v) + ",j=" + std::to_string(j) + ")";
    return row;
}

CutRow clique_cut(const Graph& g, const VertexSet& q, int j) {
    int n = g.num_vertices();
    require_vertices(g, q, "clique");
    require(!q.empty(), "clique must be nonempty");
    require(g.is_clique(q), "clique set is not a clique");
    require(j >= 1 && j <= n, "clique color out of range");
    TermBuilder b;
    for (int v : q) b.x(v, j, 1.0);
    b.w(j, -1.0);
    CutRow row{CutFamily::clique, n, b.take(), {}};
    row.label = "clique(j=" + std::to_string(j) + ",Q={" + join(q) + "})";
    return row;
}

CutRow rank_cut(const Graph& g, const VertexSet& s, int j, int alpha) {
    int n = g.num_vertices();
    require_vertices(g, s, "rank");
    require(!s.empty(), "rank set must be nonempty");
    require(alpha >= 1, "rank stability bound must be positive");
    require(j >= 1 && j <= n - alpha, "rank color must satisfy j <= n - alpha");
    TermBuilder b;
    for (int v : s) b.x(v, j, 1.0);
    for (int v = 1; v <= n; ++v)
        for (int k = n - alpha + 1; k <= n - 1; ++k) b.x(v, k, 1.0);
    b.w(j, -static_cast<double>(alpha));
    b.w(n - alpha + 1, -1.0);
    b.w(n, 1.0);
    CutRow row{CutFamily::rank, n, b.take(), {}};
    row.label = "rank(j=" + std::to_string(j) + ",alpha=" + std::to_string(alpha) + ",S={" +
                join(s) + "})";
    return row;
}

CutRow two_rank_cut(const Graph& g, const VertexSet& s, const VertexSet& q, int j) {
    int n = g.num_vertices();
    require_vertices(g, s, "two_rank S");
    require_vertices(g, q, "two_rank Q");
    require(!q.empty(), "two_rank Q must be nonempty");
    require(std::includes(s.begin(), s.end(), q.begin(), q.end()), "two_rank needs Q inside S");
    require(j >= 1 && j <= n, "two_rank color out of range");
    for (int qq : q) {
        VertexSet closed = g.closed_neighborhood(qq);
        require(std::includes(closed.begin(), closed.end(), s.begin(), s.end()),
                "two_rank Q member must see all of S");
    }
    // alpha(S) = 2 exactly: S is not a clique and has no stable triple.
    require(!g.is_clique(s), "two_rank S must not be a clique");
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b2 = a + 1; b2 < s.size(); ++b2)
            for (size_t c = b2 + 1; c < s.size(); ++c)
                require(g.adjacent(s[a], s[b2]) || g.adjacent(s[a], s[c]) ||
                            g.adjacent(s[b2], s[c]),
                        "two_rank S has a stable triple");
    TermBuilder b;
    for (int v : s) b.x(v, j, 1.0);
    for (int v : q) b.x(v, j, 1.0);  // accumulates to coefficient two
    b.w(j, -2.0);
    CutRow row{CutFamily::two_rank, n, b.take(), {}};
    row.label = "two_rank(j=" + std::to_string(j) + ",S={" + join(s) + "},Q={" + join(q) + "})";
    return row;
}

CutRow subneighborhood_cut(const Graph& g, int u, int j, const VertexSet& s, int alpha_hi,
                           int chi_lo) {
    int n = g.num_vertices();
    require(u >= 1 && u <= n, "subneighborhood vertex out of range");
    require(j >= 1 && j <= n - 1, "subneighborhood color must be below n");
    require_vertices(g, s, "subneighborhood S");
    require(!s.empty(), "subneighborhood S must be nonempty");
    for (int v : s) require(g.adjacent(u, v), "subneighborhood S must lie in N(u)");
    require(alpha_hi >= 1, "subneighborhood stability bound must be positive");
    require(chi_lo >= 1, "subneighborhood chromatic bound must be positive");
    auto xi = [&](int k) {
        return std::min(std::min(ceil_div(n, chi_lo), ceil_div(n, k)), alpha_hi);
    };
    TermBuilder b;
    int xij = xi(j);
    b.x(u, j, xij);
    for (int v : s) b.x(v, j, 1.0);
    for (int k = j + 1; k <= n; ++k) b.x(u, k, xij - xi(k));
    b.w(j, -static_cast<double>(xij));
    CutRow row{CutFamily::subneighborhood, n, b.take(), {}};
    row.label = "subneighborhood(u=" + std::to_string(u) + ",j=" + std::to_string(j) + ",S={" +
                join(s) + "},alpha<=" + std::to_string(alpha_hi) + ",chi>=" +
                std::to_string(chi_lo) + ")";
    return row;
}

CutRow outside_neighborhood_cut(const Graph& g, int u, int j, int chi_lo) {
    int n = g.num_vertices();
    require(u >= 1 && u <= n, "outside_neighborhood vertex out of range");
    require(j >= 1 && j <= n, "outside_neighborhood color out of range");
    require(chi_lo >= 1, "outside_neighborhood chromatic bound must be positive");
    int tj = std::max(j, chi_lo);
    TermBuilder b;
    b.x(u, j, n / tj - 1.0);
    VertexSet closed = g.closed_neighborhood(u);
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(closed.begin(), closed.end(), v)) b.x(v, j, -1.0);
    auto bk = [&](int k) { return k <= tj ? 0 : n / tj - n / k; };
    for (int k = tj + 1; k <= n; ++k) {
        b.x(u, k, bk(k));
        b.w(k, -static_cast<double>(bk(k) - bk(k - 1)));
    }
    CutRow row{CutFamily::outside_neighborhood, n, b.take(), {}};
    row.label = "outside_neighborhood(u=" + std::to_string(u) + ",j=" + std::to_string(j) +
                ",chi>=" + std::to_string(chi_lo) + ")";
    return row;
}

CutRow clique_neighborhood_cut(const Graph& g, int u, int j, int k, const VertexSet& q,
                               int alpha_hi) {
    int n = g.num_vertices();
    require(u >= 1 && u <= n, "clique_neighborhood vertex out of range");
    require_vertices(g, q, "clique_neighborhood Q");
    require(q.empty() || g.is_clique(q), "clique_neighborhood Q must be a clique");
    VertexSet closed = g.closed_neighborhood(u);
    for (int v : q)
        require(!std::binary_search(closed.begin(), closed.end(), v),
                "clique_neighborhood Q must avoid N[u]");
    require(k >= 3, "clique_neighborhood needs k >= 3");
    require(k <= alpha_hi + 1, "clique_neighborhood needs k <= alpha_hi + 1");
    require(j >= 1 && j <= ceil_div(n, k - 1) - 1,
            "clique_neighborhood needs j < ceil(n/(k-1))");
    TermBuilder b;
    b.x(u, j, k - 1.0);
    for (int l = ceil_div(n, k - 1); l <= n - 2; ++l) b.x(u, l, k - ceil_div(n, l));
    b.x(u, n - 1, k - 1.0);
    b.x(u, n, k - 1.0);
    VertexSet open = g.open_neighborhood(u);
    for (int v : open) b.x(v, j, 1.0);
    for (int v : q) b.x(v, j, 1.0);
    for (int v = 1; v <= n; ++v) {
        if (v == u) continue;
        b.x(v, n - 1, 1.0);
        b.x(v, n, 1.0);
    }
    auto bl = [&](int l) {
        if (l < j) return 0;
        if (l <= ceil_div(n, k) - 1) return std::min(ceil_div(n, l), alpha_hi + 1);
        if (l <= n - 2) return k;
        return k + 1;
    };
    for (int l = j; l <= n; ++l) b.w(l, -static_cast<double>(bl(l) - bl(l - 1)));
    CutRow row{CutFamily::clique_neighborhood, n, b.take(), {}};
    row.label = "clique_neighborhood(u=" + std::to_string(u) + ",j=" + std::to_string(j) +
                ",k=" + std::to_string(k) + ",Q={" + join(q) + "})";
    return row;
}

CutRow s_color_cut(const std::vector<int>& color_set, int n) {
    require(n >= 1, "s_color needs a graph size");
    require(!color_set.empty(), "s_color set must be nonempty");
    int prev = 0;
    for (int j : color_set) {
        require(j >= 1 && j <= n, "s_color color out of range");
        require(j > prev, "s_color set must be sorted and duplicate free");
        prev = j;
    }
    TermBuilder b;
    for (int j : color_set)
        for (int v = 1; v <= n; ++v) b.x(v, j, 1.0);
    auto bS = [&](int k) {
        if (k < 1) return 0;
        int d = static_cast<int>(std::upper_bound(color_set.begin(), color_set.end(), k) -
                                 color_set.begin());
        return d * (n / k) + std::min(d, n - k * (n / k));
    };
    for (int k = 1; k <= n; ++k) b.w(k, -static_cast<double>(bS(k) - bS(k - 1)));
    CutRow row{CutFamily::s_color, n, b.take(), {}};
    std::ostringstream names;
    for (size_t i = 0; i < color_set.size(); ++i) names << (i ? "," : "") << color_set[i];
    row.label = "s_color(S={" + names.str() + "})";
    return row;
}

double max_violation_over_eqcols(const CutRow& row, const Graph& g) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const BinaryPoint& p : enumerate_binary_points(g))
        worst = std::max(worst, row.violation(p));
    return worst;
}

} // namespace eqcol
