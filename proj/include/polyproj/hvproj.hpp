/**
 * Projection of an H-polytope to both vertices and facets of its shadow,
 * relative to a convex-hull oracle. Directions may be degenerate; that is
 * the key contrast with the ridge-walking enumerator. The loop maintains a
 * growing vertex list of the shadow: every hull facet of the current list
 * either supports the shadow or intersects the polytope properly, and a
 * proper intersection yields a vertex outside the current hull via one
 * lexicographic LP.
 */

#ifndef POLYPROJ_HVPROJ_HPP
#define POLYPROJ_HVPROJ_HPP

#include <cassert>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/ddoracle.hpp"
#include "polyproj/lp.hpp"
#include "polyproj/metrics.hpp"
#include "polyproj/polytope.hpp"
#include "polyproj/shadow.hpp"

namespace polyproj::hvproj {

/// Hyperplane a.x = rhs of the projection space, lifted as (a, 0^k).
struct LiftedHyperplane {
    RatVec normal_proj;
    Rat rhs;
};

using HullOracle = std::function<HPolytope(const VPolytope&)>;

struct HvOptions {
    HullOracle hull;  // empty: brute-force subset-enumeration oracle
    oracle::OracleLimits limits;
};

struct HvStats {
    std::size_t vertices = 0;
    std::size_t facets = 0;
    std::size_t hull_calls = 0;
    std::uint64_t lp_calls = 0;
};

/**
 * Exact margin of the proper-intersection test: the maximum slack of a
 * point of P on the lifted hyperplane. Proper iff the margin is positive;
 * an infeasible intersection reports margin -1.
 */
inline Rat proper_margin(const HPolytope& rec, std::size_t k, const LiftedHyperplane& h) {
    const std::size_t n = rec.ambient_dim;
    if (h.normal_proj.dim() + k != n) throw DimensionMismatchError("lifted hyperplane dims");
    RatVec c(n + 1);
    c[n] = 1;
    lp::Program p = lp::Program::maximize(n + 1, c);
    for (std::size_t i = 0; i < rec.num_inequalities(); ++i) {
        RatVec row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = rec.ineq_lhs(i, j);
        row[n] = 1;
        p.add_ub(row, rec.ineq_rhs[i]);
    }
    p.add_eq(shadow::detail::lift(h.normal_proj, k + 1), h.rhs);  // pad past the slack var too
    auto s = lp::solve(p);
    if (s.status == lp::Status::kInfeasible) return Rat(-1);
    if (s.status == lp::Status::kUnbounded) throw UnboundedError("proper test on unbounded input");
    return s.value;
}

/// Does the hyperplane meet the relative interior of the recentered P?
inline bool proper_intersection(const HPolytope& rec, std::size_t k, const LiftedHyperplane& h) {
    return proper_margin(rec, k, h) > 0;
}

namespace detail {

inline std::vector<RatVec> lifted_axes(std::size_t d, std::size_t k, int sign = 1) {
    std::vector<RatVec> out;
    for (std::size_t j = 0; j < d; ++j) {
        RatVec e(d + k);
        e[j] = sign;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace detail

/**
 * New shadow vertex beyond a properly-intersecting hull facet: maximize the
 * lifted facet normal, break ties lexicographically over the projection
 * coordinates, and project. Strictly violates the given facet inequality.
 */
inline RatVec next_vertex(const HPolytope& rec, std::size_t d, std::size_t k,
                          const LiftedHyperplane& facet) {
    const RatVec u =
        lp::lex_optimal_vertex(rec, shadow::detail::lift(facet.normal_proj, k),
                               detail::lifted_axes(d, k));
    RatVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = u[j];
    assert(dot(facet.normal_proj, x) > facet.rhs);
    return x;
}

namespace detail {

/// Lexicographic extreme of the shadow: primary lifted c, then coordinates.
inline RatVec lex_shadow_vertex(const HPolytope& rec, std::size_t d, std::size_t k,
                                const RatVec& c_proj) {
    const RatVec u = lp::lex_optimal_vertex(rec, shadow::detail::lift(c_proj, k),
                                            lifted_axes(d, k));
    RatVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = u[j];
    return x;
}

/**
 * d+1 affinely independent shadow vertices, grown greedily: start from the
 * lexicographic minimum and repeatedly optimize functionals orthogonal to
 * the affine hull found so far. Signals NotFullDimensional when the shadow
 * is genuinely lower-dimensional.
 */
inline std::vector<RatVec> seed_vertices(const HPolytope& rec, std::size_t d, std::size_t k) {
    std::vector<RatVec> S;
    {
        RatVec minus_e1(d);
        minus_e1[0] = -1;
        const RatVec u = lp::lex_optimal_vertex(
            rec, shadow::detail::lift(minus_e1, k), lifted_axes(d, k, -1));
        RatVec x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = u[j];
        S.push_back(std::move(x));
    }
    while (S.size() < d + 1) {
        RatMat span;
        for (std::size_t i = 1; i < S.size(); ++i) span.append_row(primitive(S[i] - S[0]));
        const RatMat psis = span.empty() ? RatMat::identity(d) : [&] {
            // Orthogonalize the span first so the complement routine applies.
            RatMat ortho;
            for (std::size_t i = 0; i < span.row_count(); ++i) {
                RatVec v = span.row(i);
                for (std::size_t b = 0; b < ortho.row_count(); ++b) {
                    const Rat c = dot(ortho.row(b), v);
                    if (c != 0) v -= (c / dot(ortho.row(b), ortho.row(b))) * ortho.row(b);
                }
                if (!v.is_zero()) ortho.append_row(primitive(v));
            }
            return orth_complement_basis(ortho, d);
        }();
        bool grew = false;
        for (std::size_t r = 0; r < psis.row_count() && !grew; ++r) {
            for (int sign : {1, -1}) {
                const RatVec x = lex_shadow_vertex(rec, d, k, Rat(sign) * psis.row(r));
                if (dot(psis.row(r), x) != dot(psis.row(r), S[0])) {
                    S.push_back(x);
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) throw NotFullDimensionalError("shadow is lower-dimensional");
    }
    return S;
}

}  // namespace detail

/**
 * Both representations of the shadow. Terminates exactly when every hull
 * facet of the vertex list fails the proper-intersection test, which
 * certifies completeness.
 */
inline HVPolytope enumerate_hv(const HPolytope& P, const DirectionSet& G,
                               const HvOptions& opts = {}, HvStats* stats = nullptr) {
    const std::size_t d = G.d(), k = G.k();
    if (d == 0) throw PreconditionError("projection space has dimension 0");
    auto info = lp::face_info(P, {});
    if (info.dim < static_cast<long>(P.ambient_dim))
        throw NotFullDimensionalError(info.dim < 0 ? "polytope is empty"
                                                   : "polytope is lower-dimensional");
    if (!is_bounded(P)) throw UnboundedError();

    const std::uint64_t lp_start = lp_calls_so_far();
    HullOracle hull = opts.hull;
    if (!hull) {
        const oracle::OracleLimits limits = opts.limits;
        hull = [limits](const VPolytope& V) {
            try {
                return oracle::v_to_h(V, limits);
            } catch (const TooLargeError& e) {
                throw OracleTooLargeError(e.what());
            }
        };
    }

    auto rc = recenter(shadow::transform_to_directions(P, G));
    const HPolytope& rec = rc.polytope;
    RatVec t_x(d);
    for (std::size_t j = 0; j < d; ++j) t_x[j] = rc.translation[j];

    std::set<RatVec, RatVecLexLess> V;
    for (auto& x : detail::seed_vertices(rec, d, k)) V.insert(std::move(x));

    HPolytope hull_h;
    std::size_t hull_calls = 0;
    for (;;) {
        hull_h = hull(VPolytope(std::vector<RatVec>(V.begin(), V.end()), d));
        ++hull_calls;
        bool progress = false;
        for (std::size_t i = 0; i < hull_h.num_inequalities() && !progress; ++i) {
            LiftedHyperplane h{hull_h.ineq_lhs.row(i), hull_h.ineq_rhs[i]};
            if (proper_intersection(rec, k, h)) {
                RatVec x = next_vertex(rec, d, k, h);
                const bool inserted = V.insert(std::move(x)).second;
                assert(inserted);
                (void)inserted;
                progress = true;
            }
        }
        if (!progress) break;  // every hull facet supports the shadow: complete
    }

    // Undo the recentering translation and canonicalize both forms.
    std::vector<RatVec> verts;
    verts.reserve(V.size());
    for (const auto& x : V) verts.push_back(x + t_x);
    RatMat A;
    RatVec b(hull_h.num_inequalities());
    for (std::size_t i = 0; i < hull_h.num_inequalities(); ++i) {
        A.append_row(hull_h.ineq_lhs.row(i));
        b[i] = hull_h.ineq_rhs[i] + dot(hull_h.ineq_lhs.row(i), t_x);
    }
    HVPolytope out;
    out.v = canonical_v(VPolytope(std::move(verts), d));
    out.h = canonical_h(HPolytope::from_inequalities(std::move(A), std::move(b), d),
                        /*assume_full_dim=*/true);
    if (stats) {
        stats->vertices = out.v.points.size();
        stats->facets = out.h.num_inequalities();
        stats->hull_calls = hull_calls;
        stats->lp_calls = lp_calls_so_far() - lp_start;
    }
    return out;
}

/**
 * Independent completeness certificate: the exact proper-intersection
 * margins of every facet of a claimed shadow description. All must be <= 0
 * for the description to be complete.
 */
inline std::vector<Rat> completeness_margins(const HPolytope& P, const DirectionSet& G,
                                             const HPolytope& shadow_h) {
    auto rc = recenter(shadow::transform_to_directions(P, G));
    const std::size_t d = G.d(), k = G.k();
    RatVec t_x(d);
    for (std::size_t j = 0; j < d; ++j) t_x[j] = rc.translation[j];
    std::vector<Rat> margins;
    for (std::size_t i = 0; i < shadow_h.num_inequalities(); ++i) {
        LiftedHyperplane h{shadow_h.ineq_lhs.row(i),
                           shadow_h.ineq_rhs[i] - dot(shadow_h.ineq_lhs.row(i), t_x)};
        margins.push_back(proper_margin(rc.polytope, k, h));
    }
    return margins;
}

}  // namespace polyproj::hvproj

#endif  // POLYPROJ_HVPROJ_HPP
