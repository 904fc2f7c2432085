/**
 * Exact linear algebra: Gaussian elimination, linear-system solving with
 * kernel bases, rank, and rational Gram-Schmidt (orthogonal, never
 * orthonormal, so everything stays in Q).
 */

#ifndef POLYPROJ_LINALG_HPP
#define POLYPROJ_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyproj/rat.hpp"

namespace polyproj {

/// One solution of M z = rhs plus a basis of {z : M z = 0} (rows of kernel).
struct AffineSolutionSet {
    RatVec point;
    RatMat kernel;
};

namespace detail {

/**
 * Reduced row echelon form in place. Pivot choice is deterministic: columns
 * are visited in the order given by col_order (ascending indices when empty)
 * and the topmost unprocessed row with a nonzero entry wins.
 * Returns pivot (row, col) pairs in elimination order.
 */
inline std::vector<std::pair<std::size_t, std::size_t>> rref(
    RatMat& m, std::vector<std::size_t> col_order = {}) {
    const std::size_t nr = m.row_count(), nc = m.col_count();
    if (col_order.empty()) {
        col_order.resize(nc);
        for (std::size_t j = 0; j < nc; ++j) col_order[j] = j;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t oc = 0; oc < col_order.size() && next_row < nr; ++oc) {
        const std::size_t col = col_order[oc];
        std::size_t pr = next_row;
        while (pr < nr && m(pr, col) == 0) ++pr;
        if (pr == nr) continue;
        std::swap(m.row(pr), m.row(next_row));
        const Rat inv = Rat(1) / m(next_row, col);
        if (inv != 1) m.row(next_row) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == next_row || m(r, col) == 0) continue;
            const Rat f = m(r, col);
            for (std::size_t j = 0; j < nc; ++j) {
                if (m(next_row, j) != 0) m(r, j) -= f * m(next_row, j);
            }
        }
        pivots.emplace_back(next_row, col);
        ++next_row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RatMat m) { return detail::rref(m).size(); }

inline std::size_t rank_of_rows(const std::vector<RatVec>& rows) {
    RatMat m;
    for (const auto& r : rows) m.append_row(r);
    return m.empty() ? 0 : rank(std::move(m));
}

/// Affine rank minus one: dimension of the affine hull of a point set.
inline long affine_dim_of_points(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.append_row(pts[i] - pts[0]);
    return diffs.empty() ? 0 : static_cast<long>(rank(std::move(diffs)));
}

/**
 * Solve M z = rhs exactly. Returns one solution (free variables set to 0)
 * and a kernel basis in primitive integer form with the first nonzero entry
 * positive; nullopt when the system is inconsistent.
 */
inline std::optional<AffineSolutionSet> solve_linear(const RatMat& M, const RatVec& rhs) {
    if (M.row_count() != rhs.dim())
        throw DimensionMismatchError("solve_linear: rows vs rhs entries");
    const std::size_t nr = M.row_count(), nc = M.col_count();
    RatMat aug(nr, nc + 1);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug(i, j) = M(i, j);
        aug(i, nc) = rhs[i];
    }
    std::vector<std::size_t> cols(nc);
    for (std::size_t j = 0; j < nc; ++j) cols[j] = j;
    const auto pivots = detail::rref(aug, cols);
    for (std::size_t i = pivots.size(); i < nr; ++i) {
        if (aug(i, nc) != 0) return std::nullopt;
    }
    std::vector<bool> is_pivot(nc, false);
    RatVec point(nc);
    for (const auto& [r, c] : pivots) {
        is_pivot[c] = true;
        point[c] = aug(r, nc);
    }
    RatMat kernel;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        RatVec k(nc);
        k[f] = 1;
        for (const auto& [r, c] : pivots) k[c] = -aug(r, f);
        kernel.append_row(primitive_signed(k));
    }
    return AffineSolutionSet{std::move(point), std::move(kernel)};
}

/**
 * Orthogonal complement of k pairwise-orthogonal independent vectors in
 * R^n: d = n-k pairwise-orthogonal primitive integer vectors, each exactly
 * orthogonal to every input row. Dependence is diagnosed before
 * non-orthogonality.
 */
inline RatMat orth_complement_basis(const RatMat& G, std::size_t ambient_dim) {
    const std::size_t k = G.row_count();
    if (k > 0 && G.col_count() != ambient_dim)
        throw DimensionMismatchError("direction dim vs ambient dim");
    for (std::size_t i = 0; i < k; ++i) {
        if (G.row(i).is_zero()) throw DependentDirectionsError("zero direction vector");
    }
    if (k > 0 && rank(G) < k) throw DependentDirectionsError();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (dot(G.row(i), G.row(j)) != 0) throw NotOrthogonalError();

    std::vector<RatVec> basis;  // G rows, then accepted complement vectors
    std::vector<Rat> sq;        // cached squared lengths
    for (std::size_t i = 0; i < k; ++i) {
        basis.push_back(G.row(i));
        sq.push_back(dot(G.row(i), G.row(i)));
    }
    RatMat out;
    for (std::size_t axis = 0; axis < ambient_dim && basis.size() < ambient_dim; ++axis) {
        RatVec v(ambient_dim);
        v[axis] = 1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rat c = dot(basis[b], v);
            if (c != 0) v -= (c / sq[b]) * basis[b];
        }
        if (v.is_zero()) continue;
        v = primitive(v);
        out.append_row(v);
        sq.push_back(dot(v, v));
        basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace polyproj

#endif  // POLYPROJ_LINALG_HPP
