/**
 * Fourier-Motzkin elimination with per-step redundancy removal: the honest
 * baseline projection for H-input, and the equality-elimination workhorse
 * for the gadget constructions. Intermediate descriptions can blow up
 * quadratically per step; pruning between steps is the standard mitigation
 * and the blowup is recorded per elimination.
 */

#ifndef POLYPROJ_FM_HPP
#define POLYPROJ_FM_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "polyproj/canon.hpp"
#include "polyproj/linalg.hpp"
#include "polyproj/polytope.hpp"

namespace polyproj::fm {

struct FmOptions {
    bool prune = true;             // canonicalize after every elimination
    std::size_t soft_cap = 20000;  // advisory only
    std::size_t hard_cap = 0;      // 0 = unlimited; otherwise throw IntermediateBlowup
};

struct EliminationRecord {
    std::size_t rows_with_var = 0;       // m: rows with nonzero coefficient
    std::size_t fresh_rows = 0;          // freshly combined rows (<= floor(m^2/4))
    std::size_t rows_before_prune = 0;   // pass-through + fresh
    std::size_t rows_after_prune = 0;
};

struct FmStats {
    std::vector<EliminationRecord> steps;
    std::size_t max_intermediate_rows = 0;
    bool blowup_advisory = false;
};

/**
 * Exact shadow along coordinate axis var_index: rows with zero coefficient
 * pass through, every (positive, negative) coefficient pair combines to
 * cancel the variable, and the result is canonicalized.
 */
inline HPolytope eliminate_one(const HPolytope& P, std::size_t var_index,
                               const FmOptions& opts = {}, FmStats* stats = nullptr,
                               bool assume_full_dim = false) {
    if (var_index >= P.ambient_dim) throw BadIndexError("eliminate_one variable index");
    if (P.has_equalities())
        throw PreconditionError("eliminate_one: run eliminate_equalities first");
    const std::size_t n = P.ambient_dim, m = P.num_inequalities();

    auto drop_col = [&](const RatVec& row) {
        RatVec out(n - 1);
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == var_index) continue;
            out[c++] = row[j];
        }
        return out;
    };

    std::vector<std::size_t> pos, neg;
    RatMat A;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < m; ++i) {
        const Rat& coef = P.ineq_lhs(i, var_index);
        if (coef > 0) pos.push_back(i);
        else if (coef < 0) neg.push_back(i);
        else {
            A.append_row(drop_col(P.ineq_lhs.row(i)));
            b.push_back(P.ineq_rhs[i]);
        }
    }
    std::size_t fresh = 0;
    for (std::size_t ip : pos) {
        const Rat& cp = P.ineq_lhs(ip, var_index);
        for (std::size_t in : neg) {
            const Rat& cn = P.ineq_lhs(in, var_index);
            // cp * row_n - cn * row_p has zero coefficient on the variable
            // and is a positive combination of the two rows.
            RatVec combined(n);
            for (std::size_t j = 0; j < n; ++j)
                combined[j] = cp * P.ineq_lhs(in, j) - cn * P.ineq_lhs(ip, j);
            const Rat rhs = cp * P.ineq_rhs[in] - cn * P.ineq_rhs[ip];
            ++fresh;  // every opposing pair combines, kept or not
            RatVec reduced = drop_col(combined);
            if (reduced.is_zero()) {
                if (rhs < 0) throw EmptyError("elimination exposed an infeasible system");
                continue;  // trivially satisfied
            }
            A.append_row(std::move(reduced));
            b.push_back(rhs);
        }
    }
    const std::size_t mv = pos.size() + neg.size();
    assert(fresh <= (mv * mv) / 4);
    if (stats) {
        EliminationRecord rec;
        rec.rows_with_var = mv;
        rec.fresh_rows = fresh;
        rec.rows_before_prune = A.row_count();
        stats->max_intermediate_rows = std::max(stats->max_intermediate_rows, A.row_count());
        if (A.row_count() > opts.soft_cap) stats->blowup_advisory = true;
        stats->steps.push_back(rec);
    }
    if (opts.hard_cap && A.row_count() > opts.hard_cap)
        throw IntermediateBlowupError("intermediate rows " + std::to_string(A.row_count()) +
                                      " exceed hard cap " + std::to_string(opts.hard_cap));

    auto result = HPolytope::from_inequalities(std::move(A), RatVec(std::move(b)), n - 1);
    if (opts.prune) result = canonical_h(result, assume_full_dim);
    if (stats) stats->steps.back().rows_after_prune = result.num_inequalities();
    return result;
}

struct EqualityElimination {
    HPolytope reduced;        // lives in R^(n - rank(eq)), no equality rows
    AffineMapSpec embedding;  // maps reduced-space points back to original space
};

/**
 * Remove the equality rows by Gaussian substitution. Pivots are chosen on
 * the highest-index columns so the lowest-index variables survive as the
 * coordinates of the reduced polytope (the gadget construction depends on
 * the x-block staying put).
 */
inline EqualityElimination eliminate_equalities(const HPolytope& P) {
    const std::size_t n = P.ambient_dim, e = P.num_equalities();
    if (e == 0) {
        return EqualityElimination{P, AffineMapSpec{RatMat::identity(n), RatVec(n)}};
    }
    RatMat aug(e, n + 1);
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = P.eq_lhs(i, j);
        aug(i, n) = P.eq_rhs[i];
    }
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = n - 1 - j;
    const auto pivots = detail::rref(aug, order);
    for (std::size_t i = pivots.size(); i < e; ++i)
        if (aug(i, n) != 0) throw InconsistentEqualitiesError();

    std::vector<bool> is_pivot(n, false);
    for (const auto& [r, c] : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const std::size_t nf = free_cols.size();

    RatVec z0(n);
    RatMat N(n, nf);
    for (std::size_t f = 0; f < nf; ++f) N(free_cols[f], f) = 1;
    for (const auto& [r, c] : pivots) {
        z0[c] = aug(r, n);
        for (std::size_t f = 0; f < nf; ++f) N(c, f) = -aug(r, free_cols[f]);
    }

    const RatMat Nt = N.transposed();
    RatMat A;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < P.num_inequalities(); ++i) {
        RatVec row(nf);
        for (std::size_t f = 0; f < nf; ++f) row[f] = dot(P.ineq_lhs.row(i), Nt.row(f));
        const Rat rhs = P.ineq_rhs[i] - dot(P.ineq_lhs.row(i), z0);
        if (row.is_zero()) {
            if (rhs < 0) throw EmptyError("inequalities conflict with the equality system");
            continue;
        }
        A.append_row(std::move(row));
        b.push_back(rhs);
    }
    HPolytope reduced;
    reduced.ambient_dim = nf;
    reduced.ineq_lhs = std::move(A);
    reduced.ineq_rhs = RatVec(std::move(b));
    reduced.validate();
    return EqualityElimination{std::move(reduced), AffineMapSpec{std::move(N), std::move(z0)}};
}

/**
 * Shadow of P along the k directions of G, by change of basis followed by
 * one coordinate elimination per direction with canonicalization between
 * steps. Output: canonical H-form in the d complement coordinates.
 */
inline HPolytope project_fm(const HPolytope& P, const DirectionSet& G, const FmOptions& opts = {},
                            FmStats* stats = nullptr) {
    if (G.n() != P.ambient_dim) throw DimensionMismatchError("directions vs polytope dims");
    if (P.has_equalities()) throw PreconditionError("project_fm: eliminate equalities first");
    const std::size_t d = G.d();

    auto info = lp::face_info(P, {});
    if (info.dim < static_cast<long>(P.ambient_dim))
        throw NotFullDimensionalError(info.dim < 0 ? "polytope is empty"
                                                   : "polytope is lower-dimensional");
    if (!is_bounded(P)) throw UnboundedError();

    const RatMat A_t = P.ineq_lhs.multiplied(G.stacked_inverse());
    HPolytope cur = HPolytope::from_inequalities(A_t, P.ineq_rhs, P.ambient_dim);
    cur = canonical_h(cur, /*assume_full_dim=*/true);
    for (std::size_t step = 0; step < G.k(); ++step) {
        cur = eliminate_one(cur, d, opts, stats, /*assume_full_dim=*/true);
    }
    return cur;
}

}  // namespace polyproj::fm

#endif  // POLYPROJ_FM_HPP
