/**
 * Brute-force exact conversion between H- and V-representations at desk
 * scale. Deliberately the simplest possible logic -- exhaustive subset
 * enumeration -- because this module is the trusted ground-truth oracle for
 * everything else. Guardrails refuse instances that would take too long.
 */

#ifndef POLYPROJ_DDORACLE_HPP
#define POLYPROJ_DDORACLE_HPP

#include <algorithm>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/linalg.hpp"
#include "polyproj/metrics.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj::oracle {

struct OracleLimits {
    std::size_t max_dim = 12;
    std::size_t max_rows = 40;
};

namespace detail {

/// All size-k index subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        long pos = static_cast<long>(k) - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Chunked parallel loop honoring the process-wide thread cap. The worker
/// receives (item index, thread slot).
template <class F>
inline void parallel_over(std::size_t count, F&& work) {
    const int cap = std::max(1, thread_cap().load());
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(cap), std::max<std::size_t>(count, 1));
    if (nthreads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) work(i, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += nthreads) work(i, t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/**
 * Exact vertex set of a bounded H-polytope: every n-subset of rows with an
 * invertible left-hand side is solved and the solution kept iff feasible.
 * Equality rows join the candidate row pool as single rows.
 */
inline VPolytope h_to_v(const HPolytope& P, const OracleLimits& limits = {}) {
    const std::size_t n = P.ambient_dim;
    const std::size_t m = P.num_inequalities() + P.num_equalities();
    if (n > limits.max_dim || m > limits.max_rows)
        throw TooLargeError("h_to_v guardrail: n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
    if (!is_bounded(P)) throw UnboundedError("h_to_v requires a bounded polytope");

    RatMat rows = P.ineq_lhs;
    RatVec rhs = P.ineq_rhs;
    for (std::size_t i = 0; i < P.num_equalities(); ++i) {
        rows.append_row(P.eq_lhs.row(i));
        RatVec nb(rhs.dim() + 1);
        for (std::size_t j = 0; j + 1 < nb.dim(); ++j) nb[j] = rhs[j];
        nb[nb.dim() - 1] = P.eq_rhs[i];
        rhs = std::move(nb);
    }

    const auto subsets = detail::combinations(m, n);
    const int cap = std::max(1, thread_cap().load());
    std::vector<std::set<RatVec, RatVecLexLess>> found(
        std::max<std::size_t>(1, static_cast<std::size_t>(cap)));
    detail::parallel_over(subsets.size(), [&](std::size_t s, std::size_t slot) {
        RatMat sq(n, n);
        RatVec sb(n);
        for (std::size_t r = 0; r < n; ++r) {
            sq.row(r) = rows.row(subsets[s][r]);
            sb[r] = rhs[subsets[s][r]];
        }
        auto sol = solve_linear(sq, sb);
        if (!sol || sol->kernel.row_count() > 0) return;  // singular or underdetermined
        if (P.contains(sol->point)) found[slot].insert(std::move(sol->point));
    });
    std::set<RatVec, RatVecLexLess> merged;
    for (auto& bucket : found) merged.insert(bucket.begin(), bucket.end());
    return VPolytope(std::vector<RatVec>(merged.begin(), merged.end()), n);
}

inline HPolytope v_to_h(const VPolytope& Q, const OracleLimits& limits = {},
                        bool allow_lower_dim = false);

namespace detail {

/**
 * Facet description of a lower-dimensional hull: affine-hull equality rows
 * plus the facets computed in chart coordinates and pulled back.
 */
inline HPolytope lower_dim_v_to_h(const VPolytope& Q, const OracleLimits& limits) {
    const std::size_t n = Q.ambient_dim;
    const RatVec& p0 = Q.points[0];
    RatMat B(0, n);  // affinely independent difference rows
    for (std::size_t i = 1; i < Q.points.size(); ++i) {
        RatMat trial = B;
        trial.append_row(Q.points[i] - p0);
        if (rank(trial) > B.row_count()) B = std::move(trial);
    }
    const std::size_t r = B.row_count();

    auto hull_kernel = solve_linear(B, RatVec(B.row_count()));
    RatMat E;
    RatVec e(hull_kernel->kernel.row_count());
    for (std::size_t i = 0; i < hull_kernel->kernel.row_count(); ++i) {
        E.append_row(hull_kernel->kernel.row(i));
        e[i] = dot(hull_kernel->kernel.row(i), p0);
    }

    RatMat A;
    std::vector<Rat> b;
    if (r > 0) {
        const RatMat Bt = B.transposed();
        std::vector<RatVec> chart;
        chart.reserve(Q.points.size());
        for (const auto& p : Q.points) {
            auto w = solve_linear(Bt, p - p0);
            chart.push_back(w->point);
        }
        const HPolytope sub = v_to_h(VPolytope(std::move(chart), r), limits);
        const RatMat BBt = B.multiplied(Bt);
        for (std::size_t i = 0; i < sub.num_inequalities(); ++i) {
            auto y = solve_linear(BBt, sub.ineq_lhs.row(i));
            const RatVec a_z = Bt.apply(y->point);
            auto row = polyproj::detail::primitive_row(a_z, sub.ineq_rhs[i] + dot(a_z, p0));
            A.append_row(row.first);
            b.push_back(row.second);
        }
    }
    return HPolytope::with_equalities(std::move(A), RatVec(std::move(b)), std::move(E),
                                      std::move(e), n);
}

}  // namespace detail

/**
 * Exact facet description of a full-dimensional point hull: every n-subset
 * of points spanning a hyperplane contributes its supporting orientation if
 * all points lie on one side. Output is canonical by construction. With
 * allow_lower_dim, a flat hull gets affine-hull equality rows plus its
 * facets computed inside the hull.
 */
inline HPolytope v_to_h(const VPolytope& Q, const OracleLimits& limits,
                        bool allow_lower_dim) {
    const std::size_t n = Q.ambient_dim, q = Q.points.size();
    if (n > limits.max_dim || q > limits.max_rows)
        throw TooLargeError("v_to_h guardrail: n=" + std::to_string(n) +
                            " q=" + std::to_string(q));
    if (affine_dim_of_points(Q.points) < static_cast<long>(n)) {
        if (!allow_lower_dim)
            throw NotFullDimensionalError("v_to_h requires a full-dimensional hull");
        return detail::lower_dim_v_to_h(Q, limits);
    }

    const auto subsets = detail::combinations(q, n);
    const int cap = std::max(1, thread_cap().load());
    using Row = std::pair<RatVec, Rat>;
    struct RowLess {
        bool operator()(const Row& a, const Row& b) const {
            if (a.first != b.first) return lex_less(a.first, b.first);
            return a.second < b.second;
        }
    };
    std::vector<std::set<Row, RowLess>> found(
        std::max<std::size_t>(1, static_cast<std::size_t>(cap)));
    detail::parallel_over(subsets.size(), [&](std::size_t s, std::size_t slot) {
        // Hyperplane a.p = b through the chosen points: kernel of [p | -1].
        RatMat sys(n, n + 1);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) sys(r, j) = Q.points[subsets[s][r]][j];
            sys(r, n) = -1;
        }
        auto sol = solve_linear(sys, RatVec(n));
        if (!sol || sol->kernel.row_count() != 1) return;  // affinely dependent subset
        const RatVec& w = sol->kernel.row(0);
        RatVec a(n);
        for (std::size_t j = 0; j < n; ++j) a[j] = w[j];
        Rat b = w[n];
        if (a.is_zero()) return;
        int side = 0;  // -1: all <=, +1: all >=
        for (const auto& p : Q.points) {
            const Rat v = dot(a, p) - b;
            if (v == 0) continue;
            const int s2 = v < 0 ? -1 : 1;
            if (side == 0) side = s2;
            else if (side != s2) return;  // points on both sides
        }
        if (side == 0) return;
        if (side > 0) {
            a = -a;
            b = -b;
        }
        found[slot].insert(polyproj::detail::primitive_row(a, b));
    });
    std::set<Row, RowLess> merged;
    for (auto& bucket : found) merged.insert(bucket.begin(), bucket.end());
    RatMat A;
    RatVec b(merged.size());
    std::size_t i = 0;
    for (const auto& row : merged) {
        A.append_row(row.first);
        b[i++] = row.second;
    }
    return HPolytope::from_inequalities(std::move(A), std::move(b), n);
}

}  // namespace polyproj::oracle

#endif  // POLYPROJ_DDORACLE_HPP
