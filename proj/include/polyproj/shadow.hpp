/**
 * Output-sensitive facet enumeration of the shadow of an H-polytope under
 * non-degenerate directions, by walking from facet to adjacent facet across
 * ridges.
 *
 * Everything here works in transformed coordinates: the polytope has been
 * re-based so the projection directions are the last k coordinate axes and
 * recentered so every inequality reads a.u <= 1 with the origin interior.
 * A facet of the shadow is then a vector alpha with alpha.x <= 1; a face's
 * supporting shadow normals are exactly the alpha with (alpha, 0^k) in the
 * convex hull of its tight rows, and for a ridge pre-image that region is a
 * line segment whose endpoints are the two adjacent facet normals.
 *
 * Degeneracy is detected, not assumed: the dimension claims that hold with
 * probability 1 for random directions become runtime checks with dedicated
 * errors, so adversarial direction sets fail loudly instead of wrongly.
 */

#ifndef POLYPROJ_SHADOW_HPP
#define POLYPROJ_SHADOW_HPP

#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/lp.hpp"
#include "polyproj/metrics.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj::shadow {

/// Face of the recentered H-polytope named by its maximal tight row set.
struct FaceRef {
    std::vector<std::size_t> active;
};

/// Feasible region of shadow-supporting normals at a face.
struct NormalSegment {
    enum class Kind { kEmpty, kPoint, kSegment };
    Kind kind = Kind::kEmpty;
    RatVec alpha_lo;   // the point for kPoint; lex-smaller endpoint for kSegment
    RatVec alpha_hi;   // lex-larger endpoint for kSegment
    RatVec lambda_lo;  // convex-combination certificates over the active rows:
    RatVec lambda_hi;  // lambda >= 0, sum 1, lambda^T A' = (alpha, 0^k)
};

struct ShadowOptions {
    bool audit = false;
    int initial_attempts = 8;
};

struct ShadowStats {
    std::size_t facets = 0;
    std::size_t ridge_candidates_tested = 0;
    std::uint64_t lp_calls = 0;
    std::uint64_t max_lp_calls_between_facets = 0;
};

/// Change of basis sending the complement/direction split onto coordinates.
inline HPolytope transform_to_directions(const HPolytope& P, const DirectionSet& G) {
    if (G.n() != P.ambient_dim) throw DimensionMismatchError("directions vs polytope dims");
    if (P.has_equalities()) throw PreconditionError("transform: eliminate equalities first");
    return HPolytope::from_inequalities(P.ineq_lhs.multiplied(G.stacked_inverse()), P.ineq_rhs,
                                        P.ambient_dim);
}

namespace detail {

/// Deterministic "generic" functionals (1, t, t^2, ...) over retried t.
inline RatVec vandermonde(std::size_t d, const Rat& t) {
    RatVec v(d);
    Rat p = 1;
    for (std::size_t j = 0; j < d; ++j) {
        v[j] = p;
        p *= t;
    }
    return v;
}

inline Rat retry_t(int attempt) { return rat_from_parts(7919, 7920 + attempt); }

/**
 * The set {alpha : (alpha, 0^k) in conv(rows of A on the active set)},
 * classified as empty, a point, or a segment with exact endpoints. For
 * non-degenerate directions this region is at most one-dimensional;
 * dimension >= 2 signals DegeneracyDetected.
 */
inline NormalSegment normal_region(const HPolytope& rec, std::size_t d, std::size_t k,
                                   const std::vector<std::size_t>& active) {
    const std::size_t f = active.size();
    auto lambda_program = [&](const RatVec& obj) {
        lp::Program p = lp::Program::maximize(f, obj);
        p.nonneg.assign(f, true);
        RatVec ones(f);
        for (std::size_t i = 0; i < f; ++i) ones[i] = 1;
        p.add_eq(ones, 1);
        for (std::size_t c = 0; c < k; ++c) {
            RatVec row(f);
            for (std::size_t i = 0; i < f; ++i) row[i] = rec.ineq_lhs(active[i], d + c);
            p.add_eq(row, 0);
        }
        return p;
    };
    auto alpha_of = [&](const RatVec& lambda) {
        RatVec a(d);
        for (std::size_t i = 0; i < f; ++i) {
            if (lambda[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) a[j] += lambda[i] * rec.ineq_lhs(active[i], j);
        }
        return a;
    };
    auto objective_for = [&](const RatVec& phi) {
        // phi.alpha(lambda) is linear in lambda with these coefficients.
        RatVec obj(f);
        for (std::size_t i = 0; i < f; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < d; ++j) acc += phi[j] * rec.ineq_lhs(active[i], j);
            obj[i] = acc;
        }
        return obj;
    };

    auto feas = lp::solve(lambda_program(RatVec(f)));
    if (feas.status == lp::Status::kInfeasible) return NormalSegment{};
    const RatVec alpha0 = alpha_of(feas.point);

    RatVec lo, hi, llo, lhi;
    bool separated = false;
    for (std::size_t attempt = 0; attempt <= d && !separated; ++attempt) {
        const RatVec phi = vandermonde(d, retry_t(static_cast<int>(attempt)));
        const RatVec obj = objective_for(phi);
        auto smax = lp::solve(lambda_program(obj));
        auto smin = lp::solve(lambda_program(-obj));
        RatVec amax = alpha_of(smax.point), amin = alpha_of(smin.point);
        if (amax != amin) {
            separated = true;
            lo = std::move(amin);
            hi = std::move(amax);
            llo = std::move(smin.point);
            lhi = std::move(smax.point);
        }
    }
    if (!separated) {
        NormalSegment seg;
        seg.kind = NormalSegment::Kind::kPoint;
        seg.alpha_lo = alpha0;
        seg.alpha_hi = alpha0;
        seg.lambda_lo = feas.point;
        seg.lambda_hi = feas.point;
        return seg;
    }
    // The feasible normals supporting a ridge form a line segment, so the
    // region must lie on the line through lo and hi; test every complement
    // functional of that line.
    RatMat dir;
    dir.append_row(hi - lo);
    const RatMat psi = orth_complement_basis(dir, d);
    for (std::size_t r = 0; r < psi.row_count(); ++r) {
        const RatVec obj = objective_for(psi.row(r));
        auto smax = lp::solve(lambda_program(obj));
        auto smin = lp::solve(lambda_program(-obj));
        const Rat expect = dot(psi.row(r), lo);
        if (dot(psi.row(r), alpha_of(smax.point)) != expect ||
            dot(psi.row(r), alpha_of(smin.point)) != expect)
            throw DegeneracyDetectedError("normal region has dimension >= 2");
    }
    NormalSegment seg;
    seg.kind = NormalSegment::Kind::kSegment;
    if (!lex_less(lo, hi)) {
        std::swap(lo, hi);
        std::swap(llo, lhi);
    }
    seg.alpha_lo = std::move(lo);
    seg.alpha_hi = std::move(hi);
    seg.lambda_lo = std::move(llo);
    seg.lambda_hi = std::move(lhi);
    return seg;
}

inline RatVec lift(const RatVec& alpha, std::size_t k) {
    RatVec a(alpha.dim() + k);
    for (std::size_t j = 0; j < alpha.dim(); ++j) a[j] = alpha[j];
    return a;
}

}  // namespace detail

/**
 * Pre-image of the shadow facet alpha.x <= 1: the rows of the recentered
 * polytope tight on P intersected with the lifted hyperplane. The result
 * must have dimension d-1 (equal dimensions of face and pre-image under
 * non-degenerate directions); anything else is DegeneracyDetected.
 */
inline FaceRef preimage_facets(const HPolytope& rec, std::size_t d, std::size_t k,
                               const RatVec& alpha) {
    const RatVec lifted = detail::lift(alpha, k);
    auto sup = lp::maximize(rec, lifted);
    if (sup.status != lp::Status::kOptimal || sup.value != 1)
        throw NotSupportingError("alpha.x = 1 does not support the shadow");
    RatMat extra;
    extra.append_row(lifted);
    RatVec extra_rhs{Rat(1)};
    auto info = lp::face_info(rec, {}, extra, extra_rhs);
    if (info.dim != static_cast<long>(d) - 1)
        throw DegeneracyDetectedError("pre-image dimension " + std::to_string(info.dim) +
                                      " != d-1");
    return FaceRef{std::move(info.tight)};
}

/**
 * The (d-2)-faces of the facet pre-image, as maximal active sets. At most
 * one per row of the polytope.
 */
inline std::vector<FaceRef> ridge_candidates(const HPolytope& rec, std::size_t d,
                                             const FaceRef& preimage) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<bool> in_active(rec.num_inequalities(), false);
    for (std::size_t i : preimage.active) in_active[i] = true;
    for (std::size_t j = 0; j < rec.num_inequalities(); ++j) {
        if (in_active[j]) continue;
        auto pinned = preimage.active;
        pinned.push_back(j);
        auto info = lp::face_info(rec, pinned);
        if (info.dim == static_cast<long>(d) - 2) seen.insert(std::move(info.tight));
    }
    std::vector<FaceRef> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.push_back(FaceRef{s});
    return out;
}

/**
 * Normal segment of a (d-2)-face candidate: Empty when the candidate does
 * not pre-image a ridge, a Point when it only supports one facet normal,
 * and the two adjacent facet normals as segment endpoints otherwise.
 */
inline NormalSegment ridge_segment(const HPolytope& rec, std::size_t d, std::size_t k,
                                   const FaceRef& candidate) {
    return detail::normal_region(rec, d, k, candidate.active);
}

/**
 * First facet of the shadow by interior ray shooting: leave the origin of
 * the projection space along a deterministic generic direction, read the
 * tight rows at the exit point, and accept when their normal region is a
 * single alpha whose pre-image has dimension d-1. Retries with fresh rays,
 * then signals DegenerateDirections.
 */
inline RatVec initial_facet(const HPolytope& rec, std::size_t d, std::size_t k,
                            const ShadowOptions& opts = {}) {
    const std::size_t m = rec.num_inequalities();
    for (int attempt = 0; attempt < opts.initial_attempts; ++attempt) {
        const RatVec r = detail::vandermonde(d, detail::retry_t(attempt));
        // maximize t subject to (t r, y) in P: variables (t, y).
        lp::Program p = lp::Program::maximize(1 + k, [&] {
            RatVec c(1 + k);
            c[0] = 1;
            return c;
        }());
        for (std::size_t i = 0; i < m; ++i) {
            RatVec row(1 + k);
            Rat ax = 0;
            for (std::size_t j = 0; j < d; ++j) ax += rec.ineq_lhs(i, j) * r[j];
            row[0] = ax;
            for (std::size_t c = 0; c < k; ++c) row[1 + c] = rec.ineq_lhs(i, d + c);
            p.add_ub(row, rec.ineq_rhs[i]);
        }
        auto s = lp::solve(p);
        if (s.status != lp::Status::kOptimal || s.value <= 0)
            throw PreconditionError("ray shooting failed: polytope not recentered/bounded");
        RatVec exit(d + k);
        for (std::size_t j = 0; j < d; ++j) exit[j] = s.value * r[j];
        for (std::size_t c = 0; c < k; ++c) exit[d + c] = s.point[1 + c];
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < m; ++i)
            if (rec.slack(i, exit) == 0) tight.push_back(i);

        const auto seg = detail::normal_region(rec, d, k, tight);
        if (seg.kind != NormalSegment::Kind::kPoint) continue;  // ray exited a lower face
        try {
            preimage_facets(rec, d, k, seg.alpha_lo);
        } catch (const DegeneracyDetectedError&) {
            continue;  // facet pre-image has the wrong dimension: degenerate directions
        }
        return seg.alpha_lo;
    }
    throw DegenerateDirectionsError("no generic ray produced a facet with a (d-1)-dim pre-image");
}

/**
 * Breadth-first closure over the facet-ridge graph of the shadow. Seeds
 * with initial_facet; each discovered facet contributes its pre-image, the
 * pre-image's (d-2)-faces, and every ridge's two adjacent facet normals.
 * Output: the canonical H-form of the shadow in complement coordinates.
 */
inline HPolytope enumerate_shadow_facets(const HPolytope& P, const DirectionSet& G,
                                         const ShadowOptions& opts = {},
                                         ShadowStats* stats = nullptr) {
    const std::size_t d = G.d(), k = G.k();
    if (d == 0) throw PreconditionError("projection space has dimension 0");
    auto info = lp::face_info(P, {});
    if (info.dim < static_cast<long>(P.ambient_dim))
        throw NotFullDimensionalError(info.dim < 0 ? "polytope is empty"
                                                   : "polytope is lower-dimensional");
    if (!is_bounded(P)) throw UnboundedError();

    const std::uint64_t lp_start = lp_calls_so_far();
    auto rc = recenter(transform_to_directions(P, G));
    const HPolytope& rec = rc.polytope;
    RatVec t_x(d);
    for (std::size_t j = 0; j < d; ++j) t_x[j] = rc.translation[j];

    std::set<RatVec, RatVecLexLess> discovered;
    std::uint64_t last_mark = lp_start, max_gap = 0;
    auto note_new_facet = [&](const RatVec& alpha) {
        if (!discovered.insert(alpha).second) return false;
        const std::uint64_t now = lp_calls_so_far();
        max_gap = std::max(max_gap, now - last_mark);
        last_mark = now;
        return true;
    };

    if (d == 1) {
        // A segment has two facets; no ridges to walk.
        for (int sgn : {1, -1}) {
            RatVec c(d + k);
            c[0] = sgn;
            auto s = lp::maximize(rec, c);
            if (s.status != lp::Status::kOptimal)
                throw UnboundedError("segment extent LP failed");
            note_new_facet(RatVec{Rat(sgn) / s.value});  // sgn.x <= value, rescaled to rhs 1
        }
    } else {
        std::deque<RatVec> frontier;
        try {
            const RatVec first = initial_facet(rec, d, k, opts);
            note_new_facet(first);
            frontier.push_back(first);
        } catch (const DegenerateDirectionsError& e) {
            throw DegeneracyDetectedError(e.what());
        }
        while (!frontier.empty()) {
            const RatVec alpha = std::move(frontier.front());
            frontier.pop_front();
            const FaceRef pre = preimage_facets(rec, d, k, alpha);
            const auto cands = ridge_candidates(rec, d, pre);
            if (stats) stats->ridge_candidates_tested += cands.size();
            for (const auto& cand : cands) {
                if (opts.audit) {
                    // Re-assert that accepted candidates are (d-2)-faces.
                    if (lp::affine_dim(rec, cand.active) != static_cast<long>(d) - 2)
                        throw DegeneracyDetectedError("ridge candidate dimension drifted");
                }
                const auto seg = ridge_segment(rec, d, k, cand);
                if (seg.kind != NormalSegment::Kind::kSegment) continue;
                if (opts.audit) {
                    if (seg.alpha_lo != alpha && seg.alpha_hi != alpha)
                        throw DegeneracyDetectedError(
                            "current facet is not an endpoint of its own ridge segment");
                    for (const auto& [a, l] : {std::pair{seg.alpha_lo, seg.lambda_lo},
                                               std::pair{seg.alpha_hi, seg.lambda_hi}}) {
                        auto sup = lp::maximize(rec, detail::lift(a, k));
                        if (sup.status != lp::Status::kOptimal || sup.value != 1)
                            throw DegeneracyDetectedError("segment endpoint does not support");
                        // Convex-combination certificate, re-checked by substitution.
                        Rat total = 0;
                        RatVec combo(d + k);
                        for (std::size_t li = 0; li < l.dim(); ++li) {
                            if (l[li] < 0)
                                throw DegeneracyDetectedError("negative certificate multiplier");
                            total += l[li];
                            combo += l[li] * rec.ineq_lhs.row(cand.active[li]);
                        }
                        if (total != 1 || combo != detail::lift(a, k))
                            throw DegeneracyDetectedError("certificate does not reproduce the normal");
                    }
                }
                for (const RatVec& a : {seg.alpha_lo, seg.alpha_hi}) {
                    if (note_new_facet(a)) frontier.push_back(a);
                }
            }
        }
    }

    RatMat A;
    RatVec b(discovered.size());
    std::size_t i = 0;
    for (const auto& alpha : discovered) {
        A.append_row(alpha);
        b[i++] = 1 + dot(alpha, t_x);  // undo the recentering translation
    }
    if (stats) {
        stats->facets = discovered.size();
        stats->lp_calls = lp_calls_so_far() - lp_start;
        stats->max_lp_calls_between_facets = max_gap;
    }
    return canonical_h(HPolytope::from_inequalities(std::move(A), std::move(b), d),
                       /*assume_full_dim=*/true);
}

}  // namespace polyproj::shadow

#endif  // POLYPROJ_SHADOW_HPP
