/**
 * Reduction constructions: the simplex lift that presents any V-polytope as
 * a coordinate projection of a simplex, the polytope/hull intersection
 * gadget whose x-shadow is P intersected with conv(V), the truncation of a
 * pointed cone into a pyramid whose shadow vertices mirror the cone's
 * shadow rays, seeded random direction sampling, and the desk-scale
 * projection-equality decision with witnesses.
 */

#ifndef POLYPROJ_GADGETS_HPP
#define POLYPROJ_GADGETS_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/ddoracle.hpp"
#include "polyproj/fm.hpp"
#include "polyproj/hvproj.hpp"
#include "polyproj/linalg.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj::gadgets {

/// Polyhedral cone in facet form {z : A z <= 0}, generator form, or both.
struct Cone {
    std::optional<RatMat> facet_lhs;
    std::optional<std::vector<RatVec>> rays;
    std::size_t ambient_dim = 0;

    static Cone from_facets(RatMat A, std::size_t n) {
        if (!A.empty() && A.col_count() != n) throw DimensionMismatchError("cone facet dims");
        Cone w;
        w.ambient_dim = n;
        w.facet_lhs = std::move(A);
        return w;
    }
    static Cone from_rays(std::vector<RatVec> r, std::size_t n) {
        for (const auto& v : r) {
            if (v.dim() != n) throw DimensionMismatchError("cone ray dims");
            if (v.is_zero()) throw ZeroVectorError("zero ray");
        }
        Cone w;
        w.ambient_dim = n;
        w.rays = std::move(r);
        return w;
    }
};

inline bool is_pointed(const Cone& W) {
    if (W.facet_lhs) {
        // lineality space of {Az <= 0} is ker A
        return rank(*W.facet_lhs) == W.ambient_dim;
    }
    if (W.rays->empty()) return true;  // the trivial cone {0}
    // pointed iff the rays fit strictly inside an open halfspace
    lp::Program p = lp::Program::maximize(W.ambient_dim, RatVec(W.ambient_dim));
    for (const auto& r : *W.rays) p.add_ub(-r, Rat(-1));
    return lp::solve(p).status != lp::Status::kInfeasible;
}

/// Extreme rays of a pointed facet-form cone, desk scale: kernels of
/// (n-1)-subsets of rows with rank n-1, oriented by feasibility.
inline std::vector<RatVec> cone_rays_from_facets(const RatMat& A, std::size_t n,
                                                 const oracle::OracleLimits& limits = {}) {
    if (n > limits.max_dim || A.row_count() > limits.max_rows)
        throw TooLargeError("cone ray enumeration guardrail");
    auto inside = [&](const RatVec& z) {
        for (std::size_t i = 0; i < A.row_count(); ++i)
            if (dot(A.row(i), z) > 0) return false;
        return true;
    };
    std::set<RatVec, RatVecLexLess> out;
    for (const auto& subset : oracle::detail::combinations(A.row_count(), n - 1)) {
        RatMat sub(subset.size(), n);
        for (std::size_t i = 0; i < subset.size(); ++i) sub.row(i) = A.row(subset[i]);
        auto sol = solve_linear(sub, RatVec(n - 1));
        if (!sol || sol->kernel.row_count() != 1) continue;
        RatVec z = sol->kernel.row(0);
        if (inside(z)) out.insert(primitive(z));
        else if (inside(-z)) out.insert(primitive(-z));
    }
    return {out.begin(), out.end()};
}

/// Facets of a full-dimensional generated cone, desk scale: hyperplanes
/// through (n-1)-subsets of rays with all rays on one side and contact
/// rank n-1.
inline RatMat cone_facets_from_rays(const std::vector<RatVec>& rays, std::size_t n,
                                    const oracle::OracleLimits& limits = {}) {
    if (n > limits.max_dim || rays.size() > limits.max_rows)
        throw TooLargeError("cone facet enumeration guardrail");
    if (rank_of_rows(rays) < n)
        throw NotFullDimensionalError("facet form of a lower-dimensional cone needs equalities");
    std::set<RatVec, RatVecLexLess> out;
    for (const auto& subset : oracle::detail::combinations(rays.size(), n - 1)) {
        RatMat sub(subset.size(), n);
        for (std::size_t i = 0; i < subset.size(); ++i) sub.row(i) = rays[subset[i]];
        auto sol = solve_linear(sub, RatVec(n - 1));
        if (!sol || sol->kernel.row_count() != 1) continue;
        RatVec a = sol->kernel.row(0);
        int side = 0;
        bool mixed = false;
        std::vector<RatVec> contact;
        for (const auto& r : rays) {
            const Rat v = dot(a, r);
            if (v == 0) {
                contact.push_back(r);
                continue;
            }
            const int s = v < 0 ? -1 : 1;
            if (side == 0) side = s;
            else if (side != s) {
                mixed = true;
                break;
            }
        }
        if (mixed || side == 0) continue;
        if (side > 0) a = -a;
        if (rank_of_rows(contact) != n - 1) continue;  // supporting but not a facet
        out.insert(primitive(a));
    }
    RatMat A;
    for (const auto& a : out) A.append_row(a);
    return A;
}

inline std::vector<RatVec> cone_rays(const Cone& W, const oracle::OracleLimits& limits = {}) {
    if (W.rays) return *W.rays;
    return cone_rays_from_facets(*W.facet_lhs, W.ambient_dim, limits);
}

inline RatMat cone_facets(const Cone& W, const oracle::OracleLimits& limits = {}) {
    if (W.facet_lhs) return *W.facet_lhs;
    return cone_facets_from_rays(*W.rays, W.ambient_dim, limits);
}

/// Simplex lift of a point hull, with the projection that undoes it.
struct SimplexLift {
    VPolytope simplex;      // m affinely independent points in R^(n+m-1)
    DirectionSet directions;  // the m-1 appended coordinate axes
};

/**
 * Append e_i to the i-th vertex (vertex 0 gets the zero block): every
 * polytope is the shadow of a simplex. Vertex numbering is the canonical
 * lexicographic order, so the construction is deterministic.
 */
inline SimplexLift lift_to_simplex(const VPolytope& Q) {
    std::vector<RatVec> pts = Q.points;
    std::sort(pts.begin(), pts.end(), RatVecLexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts.size(), n = Q.ambient_dim;
    const std::size_t N = n + m - 1;
    std::vector<RatVec> lifted;
    lifted.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        RatVec p(N);
        for (std::size_t j = 0; j < n; ++j) p[j] = pts[i][j];
        if (i > 0) p[n + i - 1] = 1;
        lifted.push_back(std::move(p));
    }
    std::vector<std::size_t> axes(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) axes[i] = n + i;
    return SimplexLift{VPolytope(std::move(lifted), N),
                       DirectionSet::coordinate_axes(axes, N)};
}

/// The intersection gadget and the substitution it encodes.
struct IntersectionGadget {
    HPolytope r;             // variables (x, lambda'), with equality rows x = v0 + M lambda'
    AffineMapSpec x_of_lambda;  // lambda' -> x
};

/**
 * Encode P cap conv(V) as the x-shadow of a higher-dimensional polytope:
 * Ax <= 1 plus the convex-combination system over the hull's points, with
 * the designated vertex v0 (lexicographically smallest) substituted out via
 * the lambda sum. Keeping x as explicit variables makes the projection
 * "onto the x subspace" an ordinary coordinate direction set after the
 * equality rows are eliminated.
 */
inline IntersectionGadget intersection_gadget(const HPolytope& P, const VPolytope& Q) {
    const std::size_t d = P.ambient_dim;
    if (Q.ambient_dim != d) throw DimensionMismatchError("gadget inputs live in different spaces");
    if (P.has_equalities()) throw PreconditionError("gadget: P must be inequality-only");
    for (std::size_t i = 0; i < P.num_inequalities(); ++i)
        if (P.ineq_rhs[i] <= 0)
            throw PreconditionError("gadget: origin must be interior to P (recenter first)");
    if (Q.points.empty()) throw PreconditionError("gadget: empty hull");

    std::vector<RatVec> pts = Q.points;
    std::sort(pts.begin(), pts.end(), RatVecLexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t q = pts.size();
    const RatVec& v0 = pts[0];
    const std::size_t nl = q - 1;  // lambda' variables
    const std::size_t N = d + nl;

    RatMat A;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < P.num_inequalities(); ++i) {
        RatVec row(N);
        for (std::size_t j = 0; j < d; ++j) row[j] = P.ineq_lhs(i, j) / P.ineq_rhs[i];
        A.append_row(std::move(row));
        b.push_back(1);
    }
    for (std::size_t l = 0; l < nl; ++l) {
        RatVec row(N);
        row[d + l] = -1;
        A.append_row(std::move(row));
        b.push_back(0);
    }
    {
        RatVec row(N);
        for (std::size_t l = 0; l < nl; ++l) row[d + l] = 1;
        A.append_row(std::move(row));
        b.push_back(1);
    }
    RatMat M(d, nl);
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t j = 0; j < d; ++j) M(j, l) = pts[l + 1][j] - v0[j];
    RatMat E(d, N);
    RatVec e(d);
    for (std::size_t j = 0; j < d; ++j) {
        E(j, j) = 1;
        for (std::size_t l = 0; l < nl; ++l) E(j, d + l) = -M(j, l);
        e[j] = v0[j];
    }
    IntersectionGadget out;
    out.r = HPolytope::with_equalities(std::move(A), RatVec(std::move(b)), std::move(E),
                                       std::move(e), N);
    out.x_of_lambda = AffineMapSpec{std::move(M), v0};
    return out;
}

/// Full-dimensional reduction of an equality-carrying polytope, split so
/// the leading x coordinates survive and the projection onto them is an
/// ordinary coordinate direction set over the remaining free variables.
struct SplitProjectionSetup {
    HPolytope reduced;        // coordinates (x, rest)
    DirectionSet directions;  // the coordinate axes of the rest block
    AffineMapSpec embedding;  // reduced coordinates -> original space
};

/**
 * Eliminate the equality rows of P and verify that the first x_dim
 * variables survive untouched as reduced coordinates (the elimination
 * pivots on trailing columns, so this holds exactly when the equality
 * system has full rank on the trailing block -- for the gadget and the
 * simplex lift, that is full-dimensionality of the hull).
 */
inline SplitProjectionSetup prepare_split_projection(const HPolytope& P, std::size_t x_dim) {
    auto elim = fm::eliminate_equalities(P);
    for (std::size_t j = 0; j < x_dim; ++j) {
        if (elim.embedding.offset[j] != 0) throw NotFullDimensionalError("hull spans < d");
        for (std::size_t f = 0; f < elim.embedding.matrix.col_count(); ++f) {
            const Rat expect = (f == j) ? 1 : 0;
            if (elim.embedding.matrix(j, f) != expect)
                throw NotFullDimensionalError("hull spans < d");
        }
    }
    const std::size_t nf = elim.reduced.ambient_dim;
    std::vector<std::size_t> axes;
    for (std::size_t j = x_dim; j < nf; ++j) axes.push_back(j);
    return SplitProjectionSetup{std::move(elim.reduced),
                                DirectionSet::coordinate_axes(axes, nf),
                                std::move(elim.embedding)};
}

inline SplitProjectionSetup prepare_gadget_projection(const IntersectionGadget& g,
                                                      std::size_t x_dim) {
    return prepare_split_projection(g.r, x_dim);
}

/// Cone truncation result: the pyramid and its truncating normal.
struct TruncatedCone {
    HPolytope q;
    RatVec alpha;  // orthogonal to every direction; positive on the cone
};

/**
 * Bounded pyramid with apex at the origin whose shadow vertices correspond
 * to the shadow's extreme rays: cut the cone with alpha.z <= 1 for an alpha
 * that is strictly positive on every ray and orthogonal to every projection
 * direction. No such alpha means the projected cone is not pointed.
 */
inline TruncatedCone truncate_cone(const Cone& W, const DirectionSet& G,
                                   const oracle::OracleLimits& limits = {}) {
    const std::size_t n = W.ambient_dim;
    if (G.n() != n) throw DimensionMismatchError("directions vs cone dims");
    if (!is_pointed(W)) throw NotPointedError();
    const auto rays = cone_rays(W, limits);
    if (rays.empty()) throw PreconditionError("truncate_cone: trivial cone");

    lp::Program p = lp::Program::maximize(n, RatVec(n));
    for (const auto& r : rays) p.add_ub(-r, Rat(-1));  // r.y >= 1
    for (std::size_t i = 0; i < G.k(); ++i) p.add_eq(G.directions().row(i), Rat(0));
    auto s = lp::solve(p);
    if (s.status == lp::Status::kInfeasible)
        throw ProjectionFullError("no truncating normal orthogonal to the directions");
    const RatVec alpha = primitive(s.point);

    RatMat facets = cone_facets(W, limits);
    RatMat A = std::move(facets);
    RatVec b(A.row_count() + 1);
    A.append_row(alpha);
    b[A.row_count() - 1] = 1;
    TruncatedCone out;
    out.q = canonical_h(HPolytope::from_inequalities(std::move(A), std::move(b), n));
    out.alpha = alpha;
    return out;
}

/**
 * Deterministic random direction sampling; randomly drawn directions are
 * non-degenerate for any fixed polytope with probability 1. Integer draws
 * in [-bound, bound], resampled until independent, then exactly
 * orthogonalized and cleared to primitive integers.
 */
inline DirectionSet sample_directions(std::size_t n, std::size_t k, std::uint64_t seed,
                                      long coeff_bound = 100) {
    if (k > n) throw DimensionMismatchError("more directions than dimensions");
    if (coeff_bound < 1) throw PreconditionError("coeff_bound must be positive");
    if (k == 0) return DirectionSet::identity(n);
    std::mt19937_64 eng(seed);
    auto draw = [&]() {
        RatVec v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = Rat(static_cast<long>(eng() % (2 * coeff_bound + 1)) - coeff_bound);
        return v;
    };
    RatMat raw;
    int attempts = 0;
    while (raw.row_count() < k) {
        if (++attempts > 10000) throw PreconditionError("direction sampling stalled");
        RatVec v = draw();
        if (v.is_zero()) continue;
        RatMat trial = raw;
        trial.append_row(v);
        if (rank(trial) == trial.row_count()) raw = std::move(trial);
    }
    RatMat ortho;
    for (std::size_t i = 0; i < k; ++i) {
        RatVec v = raw.row(i);
        for (std::size_t b = 0; b < ortho.row_count(); ++b) {
            const Rat c = dot(ortho.row(b), v);
            if (c != 0) v -= (c / dot(ortho.row(b), ortho.row(b))) * ortho.row(b);
        }
        ortho.append_row(primitive(v));
    }
    return DirectionSet::make(std::move(ortho), n);
}

/// Membership of p in conv(points), by one feasibility LP.
inline bool in_hull(const std::vector<RatVec>& points, const RatVec& p) {
    if (points.empty()) return false;
    const std::size_t q = points.size(), n = p.dim();
    lp::Program prog = lp::Program::maximize(q, RatVec(q));
    prog.nonneg.assign(q, true);
    for (std::size_t row = 0; row < n; ++row) {
        RatVec a(q);
        for (std::size_t j = 0; j < q; ++j) a[j] = points[j][row];
        prog.add_eq(a, p[row]);
    }
    RatVec ones(q);
    for (std::size_t j = 0; j < q; ++j) ones[j] = 1;
    prog.add_eq(ones, 1);
    return lp::solve(prog).status != lp::Status::kInfeasible;
}

struct EqCheckResult {
    bool equal = false;
    enum class Side { kNone, kInProjectionOnly, kInQOnly } side = Side::kNone;
    std::optional<RatVec> witness;
};

/**
 * Decide whether the given description equals the shadow of P, with an
 * exact point witness on inequality. Uses the hull-oracle pipeline because
 * the directions are allowed to be degenerate.
 */
inline EqCheckResult check_projection_equals(const HPolytope& P, const DirectionSet& G,
                                             const std::variant<HPolytope, VPolytope>& Q,
                                             const oracle::OracleLimits& limits = {}) {
    hvproj::HvOptions opts;
    opts.limits = limits;
    const HVPolytope pi = hvproj::enumerate_hv(P, G, opts);
    EqCheckResult out;
    if (std::holds_alternative<HPolytope>(Q)) {
        const HPolytope qc = canonical_h(std::get<HPolytope>(Q));
        out.equal = (qc == pi.h);
        if (out.equal) return out;
        for (const auto& v : pi.v.points) {
            if (!qc.contains(v)) {
                out.side = EqCheckResult::Side::kInProjectionOnly;
                out.witness = v;
                return out;
            }
        }
        VPolytope qv;
        try {
            qv = oracle::h_to_v(qc, limits);
        } catch (const TooLargeError& e) {
            throw OracleTooLargeError(e.what());
        }
        for (const auto& w : qv.points) {
            if (!pi.h.contains(w)) {
                out.side = EqCheckResult::Side::kInQOnly;
                out.witness = w;
                return out;
            }
        }
    } else {
        const VPolytope qv = canonical_v(std::get<VPolytope>(Q));
        out.equal = (qv == pi.v);
        if (out.equal) return out;
        for (const auto& w : qv.points) {
            if (!pi.h.contains(w)) {
                out.side = EqCheckResult::Side::kInQOnly;
                out.witness = w;
                return out;
            }
        }
        for (const auto& v : pi.v.points) {
            if (!in_hull(qv.points, v)) {
                out.side = EqCheckResult::Side::kInProjectionOnly;
                out.witness = v;
                return out;
            }
        }
    }
    // Canonical forms differ, so a witness must exist; reaching here means
    // the descriptions agree as sets, which contradicts canonical uniqueness.
    throw PreconditionError("projection-equality check found no witness for unequal forms");
}

}  // namespace polyproj::gadgets

#endif  // POLYPROJ_GADGETS_HPP
