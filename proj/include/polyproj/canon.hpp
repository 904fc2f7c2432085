/**
 * Canonical forms and recentering. A canonical H-description is
 * irredundant, primitive-integer scaled and lexicographically sorted, so two
 * full-dimensional H-polytopes describe the same set iff their canonical
 * forms are identical. A canonical V-description is exactly the vertex set,
 * sorted. Recentering moves the origin to an interior point and rescales
 * every inequality to right-hand side 1.
 */

#ifndef POLYPROJ_CANON_HPP
#define POLYPROJ_CANON_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "polyproj/lp.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj {

/// Bounded iff every coordinate is bounded above and below (2n LPs).
inline bool is_bounded(const HPolytope& P) {
    for (std::size_t j = 0; j < P.ambient_dim; ++j) {
        for (int s : {1, -1}) {
            RatVec c(P.ambient_dim);
            c[j] = s;
            auto sol = lp::maximize(P, c);
            if (sol.status == lp::Status::kUnbounded) return false;
            if (sol.status == lp::Status::kInfeasible) return true;  // empty is bounded
        }
    }
    return true;
}

struct RecenterResult {
    HPolytope polytope;   // {z : A z <= 1} with the origin strictly interior
    RatVec translation;   // interior point of the input; result = input - translation
};

/**
 * Translate P so that the LP-chosen interior point (max-min-slack) becomes
 * the origin, then scale every row to right-hand side 1.
 */
inline RecenterResult recenter(const HPolytope& P) {
    if (P.has_equalities())
        throw NotFullDimensionalError("recenter: eliminate equality rows first");
    auto [z, margin] = lp::interior_point_with_margin(P);
    if (margin < 0) throw EmptyError();
    if (margin == 0) throw NotFullDimensionalError();
    if (!is_bounded(P)) throw UnboundedError();
    const std::size_t m = P.num_inequalities(), n = P.ambient_dim;
    RatMat A(m, n);
    RatVec b(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Rat gap = P.slack(i, z);  // > 0: z is strictly interior
        for (std::size_t j = 0; j < n; ++j) A(i, j) = P.ineq_lhs(i, j) / gap;
        b[i] = 1;
    }
    return RecenterResult{HPolytope::from_inequalities(std::move(A), std::move(b), n),
                          std::move(z)};
}

namespace detail {

/// Row scaled so (lhs, rhs) is a primitive integer vector, orientation kept.
inline std::pair<RatVec, Rat> primitive_row(const RatVec& lhs, const Rat& rhs) {
    RatVec joint(lhs.dim() + 1);
    for (std::size_t j = 0; j < lhs.dim(); ++j) joint[j] = lhs[j];
    joint[lhs.dim()] = rhs;
    joint = primitive(joint);
    RatVec out(lhs.dim());
    for (std::size_t j = 0; j < lhs.dim(); ++j) out[j] = joint[j];
    return {std::move(out), joint[lhs.dim()]};
}

struct RowLexLess {
    bool operator()(const std::pair<RatVec, Rat>& a, const std::pair<RatVec, Rat>& b) const {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return a.second < b.second;
    }
};

}  // namespace detail

/**
 * Canonical H-form: irredundant rows (LP scan, ascending order,
 * first-removed-wins), primitive integer coefficients, lexicographic row
 * order. Full-dimensionality is required -- and verified unless the caller
 * already knows it holds.
 */
inline HPolytope canonical_h(const HPolytope& P, bool assume_full_dim = false) {
    if (P.has_equalities())
        throw NotFullDimensionalError("canonical_h: equality rows present");
    if (!assume_full_dim) {
        auto info = lp::face_info(P, {});
        if (info.dim < static_cast<long>(P.ambient_dim))
            throw NotFullDimensionalError(info.dim < 0 ? "polytope is empty"
                                                       : "polytope is lower-dimensional");
    }
    // Primitive scaling first so duplicates collide exactly.
    std::vector<std::pair<RatVec, Rat>> rows;
    std::set<std::pair<RatVec, Rat>, detail::RowLexLess> seen;
    for (std::size_t i = 0; i < P.num_inequalities(); ++i) {
        auto pr = detail::primitive_row(P.ineq_lhs.row(i), P.ineq_rhs[i]);
        if (seen.insert(pr).second) rows.push_back(std::move(pr));
    }
    // Redundancy scan over the deduplicated description.
    std::size_t i = 0;
    while (i < rows.size() && rows.size() > 1) {
        RatMat A;
        RatVec b(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            A.append_row(rows[r].first);
            b[r] = rows[r].second;
        }
        auto cur = HPolytope::from_inequalities(std::move(A), std::move(b), P.ambient_dim);
        if (lp::is_redundant(cur, i)) {
            rows.erase(rows.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    std::sort(rows.begin(), rows.end(), detail::RowLexLess{});
    RatMat A;
    RatVec b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        A.append_row(rows[r].first);
        b[r] = rows[r].second;
    }
    return HPolytope::from_inequalities(std::move(A), std::move(b), P.ambient_dim);
}

/**
 * Canonical V-form: exactly the vertices of the convex hull of the points,
 * deduplicated and sorted. One feasibility LP per surviving point decides
 * whether it is a convex combination of the others.
 */
inline VPolytope canonical_v(const VPolytope& Q) {
    std::vector<RatVec> pts = Q.points;
    std::sort(pts.begin(), pts.end(), RatVecLexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t i = 0;
    while (i < pts.size() && pts.size() > 1) {
        // Is pts[i] a convex combination of the others?
        const std::size_t q = pts.size() - 1, n = Q.ambient_dim;
        lp::Program p = lp::Program::maximize(q, RatVec(q));
        p.nonneg.assign(q, true);
        for (std::size_t row = 0; row < n; ++row) {
            RatVec a(q);
            std::size_t col = 0;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (j == i) continue;
                a[col++] = pts[j][row];
            }
            p.add_eq(a, pts[i][row]);
        }
        {
            RatVec ones(q);
            for (std::size_t j = 0; j < q; ++j) ones[j] = 1;
            p.add_eq(ones, 1);
        }
        if (lp::solve(p).status != lp::Status::kInfeasible) {
            pts.erase(pts.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    return VPolytope(std::move(pts), Q.ambient_dim);
}

}  // namespace polyproj

#endif  // POLYPROJ_CANON_HPP
