/**
 * Core polytope representations: inequality descriptions, point hulls, the
 * combined form, and orthogonal projection direction sets with their exact
 * complement bases.
 */

#ifndef POLYPROJ_POLYTOPE_HPP
#define POLYPROJ_POLYTOPE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyproj/linalg.hpp"
#include "polyproj/rat.hpp"

namespace polyproj {

/**
 * H-polytope {z : A z <= b}, optionally with equality rows E z = e.
 * Equality rows are legal storage (the intersection gadget needs them) but
 * every algorithm that requires full-dimensionality checks for them and
 * signals instead of mis-handling.
 */
struct HPolytope {
    RatMat ineq_lhs;  // m x n
    RatVec ineq_rhs;  // m
    RatMat eq_lhs;    // e x n (possibly empty)
    RatVec eq_rhs;    // e
    std::size_t ambient_dim = 0;

    HPolytope() = default;

    static HPolytope from_inequalities(RatMat A, RatVec b, std::size_t n) {
        HPolytope p;
        p.ambient_dim = n;
        p.ineq_lhs = std::move(A);
        p.ineq_rhs = std::move(b);
        p.validate();
        return p;
    }

    static HPolytope with_equalities(RatMat A, RatVec b, RatMat E, RatVec e, std::size_t n) {
        HPolytope p;
        p.ambient_dim = n;
        p.ineq_lhs = std::move(A);
        p.ineq_rhs = std::move(b);
        p.eq_lhs = std::move(E);
        p.eq_rhs = std::move(e);
        p.validate();
        return p;
    }

    void validate() const {
        if (!ineq_lhs.empty() && ineq_lhs.col_count() != ambient_dim)
            throw DimensionMismatchError("inequality columns vs ambient dim");
        if (ineq_lhs.row_count() != ineq_rhs.dim())
            throw DimensionMismatchError("inequality rows vs rhs entries");
        if (!eq_lhs.empty() && eq_lhs.col_count() != ambient_dim)
            throw DimensionMismatchError("equality columns vs ambient dim");
        if (eq_lhs.row_count() != eq_rhs.dim())
            throw DimensionMismatchError("equality rows vs rhs entries");
        for (std::size_t i = 0; i < ineq_lhs.row_count(); ++i)
            if (ineq_lhs.row(i).is_zero())
                throw PreconditionError("zero inequality row " + std::to_string(i));
    }

    std::size_t num_inequalities() const { return ineq_lhs.row_count(); }
    std::size_t num_equalities() const { return eq_lhs.row_count(); }
    bool has_equalities() const { return eq_lhs.row_count() > 0; }

    Rat slack(std::size_t row, const RatVec& z) const {
        return ineq_rhs[row] - dot(ineq_lhs.row(row), z);
    }

    bool contains(const RatVec& z) const {
        if (z.dim() != ambient_dim) throw DimensionMismatchError("point dim vs ambient dim");
        for (std::size_t i = 0; i < num_inequalities(); ++i)
            if (slack(i, z) < 0) return false;
        for (std::size_t i = 0; i < num_equalities(); ++i)
            if (dot(eq_lhs.row(i), z) != eq_rhs[i]) return false;
        return true;
    }

    bool strictly_contains(const RatVec& z) const {
        if (has_equalities()) return false;
        for (std::size_t i = 0; i < num_inequalities(); ++i)
            if (slack(i, z) <= 0) return false;
        return true;
    }

    friend bool operator==(const HPolytope& a, const HPolytope& b) {
        return a.ambient_dim == b.ambient_dim && a.ineq_lhs == b.ineq_lhs &&
               a.ineq_rhs == b.ineq_rhs && a.eq_lhs == b.eq_lhs && a.eq_rhs == b.eq_rhs;
    }
    friend bool operator!=(const HPolytope& a, const HPolytope& b) { return !(a == b); }
};

/// V-polytope: the convex hull of a finite point set.
struct VPolytope {
    std::vector<RatVec> points;
    std::size_t ambient_dim = 0;

    VPolytope() = default;
    VPolytope(std::vector<RatVec> pts, std::size_t n) : points(std::move(pts)), ambient_dim(n) {
        for (const auto& p : points)
            if (p.dim() != ambient_dim)
                throw DimensionMismatchError("point dim vs ambient dim");
    }

    friend bool operator==(const VPolytope& a, const VPolytope& b) {
        return a.ambient_dim == b.ambient_dim && a.points == b.points;
    }
    friend bool operator!=(const VPolytope& a, const VPolytope& b) { return !(a == b); }
};

/// Both representations of the same polytope.
struct HVPolytope {
    HPolytope h;
    VPolytope v;
};

/// Affine map w -> offset + M w.
struct AffineMapSpec {
    RatMat matrix;
    RatVec offset;

    RatVec apply(const RatVec& w) const {
        if (w.dim() != matrix.col_count()) throw DimensionMismatchError("affine map input dim");
        return offset + matrix.apply(w);
    }
};

/**
 * k pairwise-orthogonal projection directions in R^n together with the
 * induced d = n-k complement basis. Projection images live in complement
 * coordinates: x_i = c_i . z for complement rows c_i. Every pipeline in the
 * library uses this one coordinate convention, which is what makes their
 * outputs directly comparable.
 */
class DirectionSet {
  public:
    /// Directions may be empty (k = 0); the ambient dimension is explicit.
    static DirectionSet make(RatMat directions, std::size_t ambient_dim) {
        DirectionSet g;
        g.n_ = ambient_dim;
        g.comp_ = orth_complement_basis(directions, ambient_dim);  // validates
        g.dirs_ = std::move(directions);
        return g;
    }

    static DirectionSet identity(std::size_t ambient_dim) {
        return make(RatMat(), ambient_dim);
    }

    /// Coordinate axes idx (0-based) as directions in R^n.
    static DirectionSet coordinate_axes(const std::vector<std::size_t>& idx, std::size_t n) {
        RatMat dirs;
        for (std::size_t i : idx) {
            RatVec v(n);
            v[i] = 1;
            dirs.append_row(v);
        }
        return make(std::move(dirs), n);
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return dirs_.row_count(); }
    std::size_t d() const { return n_ - k(); }

    const RatMat& directions() const { return dirs_; }
    const RatMat& complement() const { return comp_; }

    /// Image of z in complement coordinates (dimension d).
    RatVec project_point(const RatVec& z) const { return comp_.apply(z); }

    /// Stacked basis (complement rows first, then directions): invertible n x n.
    RatMat stacked() const {
        RatMat t = comp_;
        for (std::size_t i = 0; i < dirs_.row_count(); ++i) t.append_row(dirs_.row(i));
        return t;
    }

    /// Exact inverse of stacked(), using orthogonality: T^-1 = T^T diag(1/|row|^2).
    RatMat stacked_inverse() const {
        const RatMat t = stacked();
        RatMat inv(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const Rat sq = dot(t.row(i), t.row(i));
            for (std::size_t j = 0; j < n_; ++j) inv(j, i) = t(i, j) / sq;
        }
        return inv;
    }

  private:
    std::size_t n_ = 0;
    RatMat dirs_;
    RatMat comp_;
};

}  // namespace polyproj

#endif  // POLYPROJ_POLYTOPE_HPP
