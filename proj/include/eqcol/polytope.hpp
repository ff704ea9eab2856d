// The polytope laboratory: machine checks for the dimension formula, for
// the affinely independent witness families behind it, and for which
// inequality rows define facets of the equitable-coloring polytope.
//
// Everything here reasons over the convex hull of the binary points of a
// graph (see coloring.hpp for the encoding). The hull has dimension
// n^2 - (chi_eq + |skip| + 1); its affine hull is cut out by one
// assignment equation per vertex, w_j = 1 for j <= chi_eq, w_j = w_{j+1}
// for each skipped color count, and the tie between color class n and
// w_n. Rank computations run over exact rationals; a double-precision
// sweep only pre-screens candidates and never certifies anything.
#ifndef EQCOL_POLYTOPE_HPP
#define EQCOL_POLYTOPE_HPP

#include <string>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "eqcol/coloring.hpp"
#include "eqcol/cuts.hpp"
#include "eqcol/graph.hpp"

namespace Eigen {

// Scalar traits so dense vectors over GMP rationals work.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
};

} // namespace Eigen

namespace eqcol {

// Row-echelon basis over an arbitrary scalar. Stored rows are normalized
// to a unit pivot and fully reduced against their predecessors, so an
// insertion is a single elimination sweep.
template <typename Scalar>
class RowBasis {
public:
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    explicit RowBasis(Eigen::Index cols) : cols_(cols) {}

    Eigen::Index cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Eliminates the stored pivots from v in place and returns the column
    // of the first surviving entry with magnitude above tol, or -1 when v
    // lies in the row span.
    Eigen::Index reduce(Vec& v, const Scalar& tol) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar f = v(pivots_[i]);
            if (f != Scalar(0))
                v -= f * rows_[i];
        }
        for (Eigen::Index c = 0; c < cols_; ++c) {
            Scalar mag = v(c) < Scalar(0) ? Scalar(-v(c)) : Scalar(v(c));
            if (mag > tol)
                return c;
        }
        return -1;
    }

    // Returns whether v grew the basis.
    bool insert(Vec v, const Scalar& tol) {
        Eigen::Index p = reduce(v, tol);
        if (p < 0)
            return false;
        Scalar pivot = v(p);
        v /= pivot;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    Eigen::Index cols_;
    std::vector<Vec> rows_;
    std::vector<Eigen::Index> pivots_;
};

// Affine rank of a growing point family. Candidates are homogenized and
// pre-screened with a double elimination at pivot tolerance 1e-8; only
// the exact rational basis decides whether the rank grew.
class AffineRankAccumulator {
public:
    explicit AffineRankAccumulator(int coords);

    bool insert(const std::vector<double>& point);
    bool insert(const BinaryPoint& p) { return insert(p.dense()); }

    int rank() const { return exact_.rank(); }

private:
    int coords_;
    RowBasis<double> screen_;
    RowBasis<mpq_class> exact_;
};

// Exact affine rank of a fixed family; all points must share a dimension.
int affine_rank(const std::vector<BinaryPoint>& points);

struct AffineFamily {
    std::vector<BinaryPoint> points;
    int rank = 0;
};

// n^2 - (chi_eq + |skip| + 1), with chi_eq and the skip set taken from
// the oracle. Exponential in the worst case like the oracle itself.
int ecp_dimension(const Graph& g);

// True when p satisfies every equation of the affine hull listed at the
// top of this header. Integer arithmetic throughout.
bool satisfies_hull_equations(const BinaryPoint& p, int chi_eq, const std::vector<int>& skip);

// Builds the standard witness family of n^2 - chi_eq - |skip| equitable
// colorings: an (n-1)-eqcol whose doubled class holds a chosen
// non-adjacent pair, its transpositions with the top class, the coloring
// that splits the pair into a fresh color, the 3-cycles and
// transpositions of that one, and one k-eqcol for every remaining
// attainable k <= n-2. The family spans the affine hull, which the
// cached rank certifies. Throws std::domain_error unless
// 2 <= chi_eq <= n-2.
AffineFamily dimension_witness_family(const Graph& g);

// Checks the dimension formula. Up to n = 8 this enumerates every binary
// point, verifies the hull equations on each, certifies that the
// equation system has full row rank, and confirms the points reach
// affine rank ecp_dimension + 1. Beyond that it falls back to the
// witness family: its rank must reach the same value and its points must
// satisfy the equations.
bool verify_dimension(const Graph& g);

enum class FaceStatus {
    invalid,            // some equitable coloring violates the row
    valid_face,         // valid, and certified not to be a facet
    facet_verified,     // face rank reached ecp_dimension and an off-face point exists
    rank_bound_reached, // effort exhausted before a verdict; inconclusive
};

const char* face_status_name(FaceStatus s);

struct FaceVerdict {
    FaceStatus status = FaceStatus::rank_bound_reached;
    int achieved_rank = 0; // affine rank accumulated on the face
    int dim_ecp = 0;
    bool off_face_seen = false;
};

// Classifies the face that a canonical "<= 0" row cuts out of the hull.
// Up to n = 8 the verdict is decided by full enumeration and is exact,
// including valid_face for proper faces of lower dimension. Beyond that
// a budgeted generator walks witness orbits (transpositions, 3-cycles,
// color introductions) and a backtracking search constrained to rows
// that hold with equality; it can certify invalid or facet_verified but
// reports rank_bound_reached when the budget runs out. effort caps the
// number of distinct points examined; 0 means 50 * ecp_dimension.
FaceVerdict verify_face(const Graph& g, const CutRow& row, long effort = 0);

// True when both rows reach the same face rank under the same effort.
// Exact on enumeration sizes.
bool face_dims_equal(const Graph& g, const CutRow& a, const CutRow& b, long effort = 0);

// One-line report: graph id, row label, verdict, rank achieved / target.
std::string face_report(const std::string& graph_id, const CutRow& row, const FaceVerdict& v);

} // namespace eqcol

#endif
