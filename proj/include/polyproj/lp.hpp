/**
 * Exact rational linear programming: a dense two-phase simplex with Bland's
 * anti-cycling rule, plus the derived predicates every algorithm here calls
 * "solving a Linear Program" (interior points, redundancy, affine dimension
 * of faces, lexicographic optimization).
 *
 * All comparisons are exact; determinism comes from Bland's rule (lowest
 * eligible column enters, lowest basic variable leaves on ratio ties) and a
 * fixed initial basis.
 */

#ifndef POLYPROJ_LP_HPP
#define POLYPROJ_LP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polyproj/errors.hpp"
#include "polyproj/metrics.hpp"
#include "polyproj/polytope.hpp"
#include "polyproj/rat.hpp"

namespace polyproj::lp {

enum class Status { kOptimal, kUnbounded, kInfeasible };

/// Exact dual multipliers: nonnegative per inequality row, free per equality.
struct DualCertificate {
    RatVec ineq;
    RatVec eq;
};

struct Solution {
    Status status = Status::kInfeasible;
    RatVec point;  // optimal point (kOptimal)
    Rat value;     // optimal objective value (kOptimal)
    RatVec ray;    // feasible direction with positive objective (kUnbounded)
    std::optional<DualCertificate> dual;
};

/**
 * maximize c.x  subject to  a_ub x <= b_ub,  a_eq x = b_eq,
 * with x_j >= 0 where nonneg[j] is set (x_j free otherwise).
 */
struct Program {
    std::size_t nvars = 0;
    RatMat a_ub;
    RatVec b_ub;
    RatMat a_eq;
    RatVec b_eq;
    RatVec c;
    std::vector<bool> nonneg;  // empty = all free

    static Program maximize(std::size_t nvars, RatVec c) {
        Program p;
        p.nvars = nvars;
        p.c = std::move(c);
        return p;
    }
    void add_ub(const RatVec& a, const Rat& b) {
        a_ub.append_row(a);
        RatVec nb(b_ub.dim() + 1);
        for (std::size_t i = 0; i + 1 < nb.dim(); ++i) nb[i] = b_ub[i];
        nb[nb.dim() - 1] = b;
        b_ub = std::move(nb);
    }
    void add_eq(const RatVec& a, const Rat& b) {
        a_eq.append_row(a);
        RatVec nb(b_eq.dim() + 1);
        for (std::size_t i = 0; i + 1 < nb.dim(); ++i) nb[i] = b_eq[i];
        nb[nb.dim() - 1] = b;
        b_eq = std::move(nb);
    }
};

namespace detail {

class SimplexTableau {
  public:
    explicit SimplexTableau(const Program& p) : prog_(p) {
        n_ = p.nvars;
        m1_ = p.a_ub.row_count();
        m2_ = p.a_eq.row_count();
        build();
    }

    Solution run(bool want_dual) {
        lp_call_counter().fetch_add(1, std::memory_order_relaxed);
        if (!phase1()) return infeasible();
        return phase2(want_dual);
    }

  private:
    const Program& prog_;
    std::size_t n_ = 0, m1_ = 0, m2_ = 0;
    std::vector<std::size_t> pos_col_;      // per original var
    std::vector<long> neg_col_;             // -1 when var is nonnegative
    std::vector<long> slack_col_;           // per inequality row
    std::vector<long> art_col_;             // per tableau row, -1 if none
    std::vector<int> row_sign_;             // +-1 applied to stored row
    std::size_t ncols_ = 0;                 // includes rhs col 0
    std::vector<RatVec> rows_;              // constraint rows
    RatVec obj1_, obj2_;                    // phase-1/phase-2 reduced-cost rows
    std::vector<long> basis_;               // basic variable (column) per row
    std::size_t first_art_col_ = 0;

    bool is_art(std::size_t col) const { return col >= first_art_col_; }

    void build() {
        const bool all_free = prog_.nonneg.empty();
        pos_col_.resize(n_);
        neg_col_.assign(n_, -1);
        std::size_t col = 1;
        for (std::size_t j = 0; j < n_; ++j) pos_col_[j] = col++;
        for (std::size_t j = 0; j < n_; ++j) {
            if (all_free || !prog_.nonneg[j]) neg_col_[j] = static_cast<long>(col++);
        }
        slack_col_.assign(m1_, -1);
        for (std::size_t i = 0; i < m1_; ++i) slack_col_[i] = static_cast<long>(col++);
        first_art_col_ = col;

        const std::size_t m = m1_ + m2_;
        row_sign_.resize(m);
        art_col_.assign(m, -1);
        // Artificial columns are needed for equality rows and for inequality
        // rows whose flipped slack cannot serve as the initial basic variable.
        std::vector<bool> needs_art(m, false);
        for (std::size_t i = 0; i < m; ++i) {
            const bool ineq = i < m1_;
            const Rat& b = ineq ? prog_.b_ub[i] : prog_.b_eq[i - m1_];
            row_sign_[i] = (b < 0) ? -1 : 1;
            needs_art[i] = !ineq || row_sign_[i] < 0;
            if (needs_art[i]) art_col_[i] = static_cast<long>(col++);
        }
        ncols_ = col;

        rows_.assign(m, RatVec(ncols_));
        basis_.assign(m, -1);
        for (std::size_t i = 0; i < m; ++i) {
            const bool ineq = i < m1_;
            const RatVec& a = ineq ? prog_.a_ub.row(i) : prog_.a_eq.row(i - m1_);
            const Rat& b = ineq ? prog_.b_ub[i] : prog_.b_eq[i - m1_];
            const int s = row_sign_[i];
            RatVec& r = rows_[i];
            r[0] = s < 0 ? Rat(-b) : b;
            for (std::size_t j = 0; j < n_; ++j) {
                if (a[j] == 0) continue;
                const Rat v = s < 0 ? Rat(-a[j]) : a[j];
                r[pos_col_[j]] = v;
                if (neg_col_[j] >= 0) r[neg_col_[j]] = -v;
            }
            if (ineq) r[slack_col_[i]] = s < 0 ? Rat(-1) : Rat(1);
            if (art_col_[i] >= 0) {
                r[art_col_[i]] = 1;
                basis_[i] = art_col_[i];
            } else {
                basis_[i] = slack_col_[i];
            }
        }

        // Phase-1 objective: maximize -(sum of artificials); expressed over
        // the current (artificial) basis by subtracting the artificial rows.
        obj1_ = RatVec(ncols_);
        for (std::size_t i = 0; i < m; ++i) {
            if (art_col_[i] < 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) obj1_[j] -= rows_[i][j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (art_col_[i] >= 0) obj1_[art_col_[i]] = 0;
        }

        // Phase-2 objective row: entries -c_j (reduced costs, bottom-row form).
        obj2_ = RatVec(ncols_);
        for (std::size_t j = 0; j < n_; ++j) {
            if (prog_.c[j] == 0) continue;
            obj2_[pos_col_[j]] = -prog_.c[j];
            if (neg_col_[j] >= 0) obj2_[neg_col_[j]] = prog_.c[j];
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        RatVec& prow = rows_[pr];
        const Rat inv = Rat(1) / prow[pc];
        if (inv != 1) prow *= inv;
        auto eliminate = [&](RatVec& r) {
            const Rat f = r[pc];
            if (f == 0) return;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (prow[j] != 0) r[j] -= f * prow[j];
            }
            r[pc] = 0;
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != pr) eliminate(rows_[i]);
        }
        eliminate(obj1_);
        eliminate(obj2_);
        basis_[pr] = static_cast<long>(pc);
    }

    /// Bland: entering column = lowest eligible index with negative entry in
    /// the active objective row; leaving row = lowest basic variable among
    /// the minimum-ratio rows. Returns false on unboundedness.
    bool iterate(RatVec& obj, bool allow_art, std::size_t* unbounded_col) {
        for (;;) {
            std::size_t pc = 0;
            for (std::size_t j = 1; j < ncols_; ++j) {
                if (!allow_art && is_art(j)) continue;
                if (obj[j] < 0) {
                    pc = j;
                    break;
                }
            }
            if (pc == 0) return true;  // optimal
            long pr = -1;
            Rat best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][pc] <= 0) continue;
                Rat ratio = rows_[i][0] / rows_[i][pc];
                if (pr < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[pr])) {
                    pr = static_cast<long>(i);
                    best_ratio = std::move(ratio);
                }
            }
            if (pr < 0) {
                if (unbounded_col) *unbounded_col = pc;
                return false;
            }
            pivot(static_cast<std::size_t>(pr), pc);
        }
    }

    bool phase1() {
        bool have_art = false;
        for (long a : art_col_) have_art |= (a >= 0);
        if (have_art) {
            iterate(obj1_, false, nullptr);  // cannot be unbounded (bounded below by 0)
            if (obj1_[0] != 0) return false;  // leftover artificial value
            drive_out_artificials();
        }
        return true;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < 0 || !is_art(static_cast<std::size_t>(basis_[i]))) {
                ++i;
                continue;
            }
            std::size_t pc = 0;
            for (std::size_t j = 1; j < first_art_col_; ++j) {
                if (rows_[i][j] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc != 0) {
                pivot(i, pc);  // degenerate: rhs is 0 here
                ++i;
            } else {
                // Redundant constraint row; remove it.
                rows_.erase(rows_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                art_col_.erase(art_col_.begin() + static_cast<long>(i));
                row_sign_.erase(row_sign_.begin() + static_cast<long>(i));
                // row_sign_/art_col_ are indexed per surviving tableau row for
                // the dual extraction below; original-row duals use columns.
            }
        }
    }

    Solution infeasible() const {
        Solution s;
        s.status = Status::kInfeasible;
        return s;
    }

    RatVec current_point() const {
        RatVec x(n_);
        std::vector<Rat> val(ncols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] >= 0) val[static_cast<std::size_t>(basis_[i])] = rows_[i][0];
        }
        for (std::size_t j = 0; j < n_; ++j) {
            x[j] = val[pos_col_[j]];
            if (neg_col_[j] >= 0) x[j] -= val[neg_col_[j]];
        }
        return x;
    }

    Solution phase2(bool want_dual) {
        Solution s;
        std::size_t ub_col = 0;
        if (!iterate(obj2_, false, &ub_col)) {
            s.status = Status::kUnbounded;
            std::vector<Rat> dir(ncols_);
            dir[ub_col] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (basis_[i] >= 0) dir[static_cast<std::size_t>(basis_[i])] = -rows_[i][ub_col];
            }
            RatVec ray(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                ray[j] = dir[pos_col_[j]];
                if (neg_col_[j] >= 0) ray[j] -= dir[neg_col_[j]];
            }
            s.ray = std::move(ray);
            return s;
        }
        s.status = Status::kOptimal;
        s.point = current_point();
        s.value = obj2_[0];
        if (want_dual) {
            DualCertificate cert;
            cert.ineq = RatVec(m1_);
            cert.eq = RatVec(m2_);
            for (std::size_t i = 0; i < m1_; ++i) {
                const Rat y = obj2_[static_cast<std::size_t>(slack_col_[i])];
                cert.ineq[i] = (prog_.b_ub[i] < 0) ? Rat(-y) : y;
            }
            // Equality duals read off the artificial columns, which stay in
            // the tableau (blocked from entering) exactly for this purpose.
            // Walk the original rows in build order to find each row's column.
            std::size_t cursor = first_art_col_;
            for (std::size_t i = 0; i < m1_ + m2_; ++i) {
                const bool ineq = i < m1_;
                const Rat& b = ineq ? prog_.b_ub[i] : prog_.b_eq[i - m1_];
                const bool has_art = !ineq || b < 0;
                if (!has_art) continue;
                if (!ineq) {
                    const Rat y = obj2_[cursor];
                    cert.eq[i - m1_] = (b < 0) ? Rat(-y) : y;
                }
                ++cursor;
            }
            s.dual = std::move(cert);
        }
        return s;
    }
};

}  // namespace detail

/// Solve an explicit program. Deterministic: identical inputs give identical
/// outputs, bit for bit.
inline Solution solve(const Program& p, bool want_dual = false) {
    if (p.c.dim() != p.nvars) throw DimensionMismatchError("objective dim vs nvars");
    if (!p.nonneg.empty() && p.nonneg.size() != p.nvars)
        throw DimensionMismatchError("nonneg mask vs nvars");
    detail::SimplexTableau t(p);
    return t.run(want_dual);
}

inline Program program_over(const HPolytope& P, RatVec c) {
    Program p = Program::maximize(P.ambient_dim, std::move(c));
    p.a_ub = P.ineq_lhs;
    p.b_ub = P.ineq_rhs;
    p.a_eq = P.eq_lhs;
    p.b_eq = P.eq_rhs;
    return p;
}

/// maximize c.z over P. Infeasible/Unbounded are outcomes, never errors.
inline Solution maximize(const HPolytope& P, const RatVec& c, bool want_dual = false) {
    if (c.dim() != P.ambient_dim) throw DimensionMismatchError("objective dim vs ambient dim");
    return solve(program_over(P, c), want_dual);
}

/// Feasibility probe; returns a point of P when nonempty.
inline std::optional<RatVec> feasible_point(const HPolytope& P) {
    auto s = solve(program_over(P, RatVec(P.ambient_dim)));
    if (s.status == Status::kInfeasible) return std::nullopt;
    return s.point;
}

/**
 * Max-min-slack interior point. Returns the point and the slack margin;
 * margin 0 means the polytope is not full-dimensional. The slack program
 * being unbounded implies P is unbounded and is reported as such.
 */
inline std::pair<RatVec, Rat> interior_point_with_margin(const HPolytope& P) {
    if (P.has_equalities())
        throw NotFullDimensionalError("interior_point requires no equality rows");
    const std::size_t n = P.ambient_dim, m = P.num_inequalities();
    RatVec c(n + 1);
    c[n] = 1;
    Program p = Program::maximize(n + 1, c);
    for (std::size_t i = 0; i < m; ++i) {
        RatVec row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = P.ineq_lhs(i, j);
        row[n] = 1;
        p.add_ub(row, P.ineq_rhs[i]);
    }
    auto s = solve(p);
    if (s.status == Status::kInfeasible) throw EmptyError();
    if (s.status == Status::kUnbounded) throw UnboundedError("slack program unbounded");
    RatVec z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = s.point[j];
    return {std::move(z), s.value};
}

/// Strict interior point of P; NotFullDimensional when none exists.
inline RatVec interior_point(const HPolytope& P) {
    auto [z, margin] = interior_point_with_margin(P);
    if (margin < 0) throw EmptyError();  // even the best point violates some row
    if (margin == 0) throw NotFullDimensionalError();
    return z;
}

/// True iff dropping the row leaves the feasible set unchanged.
inline bool is_redundant(const HPolytope& P, std::size_t row_index) {
    if (row_index >= P.num_inequalities()) throw BadIndexError();
    Program p = Program::maximize(P.ambient_dim, P.ineq_lhs.row(row_index));
    for (std::size_t i = 0; i < P.num_inequalities(); ++i) {
        if (i == row_index) continue;
        p.add_ub(P.ineq_lhs.row(i), P.ineq_rhs[i]);
    }
    p.a_eq = P.eq_lhs;
    p.b_eq = P.eq_rhs;
    auto s = solve(p);
    if (s.status == Status::kInfeasible) return true;  // the rest is already empty
    if (s.status == Status::kUnbounded) return false;
    return s.value <= P.ineq_rhs[row_index];
}

/// Result of analyzing the face {z in P : pinned rows tight, extra_eq rows hold}.
struct FaceInfo {
    long dim = -1;                    // -1 when the face is empty
    std::vector<std::size_t> tight;   // all inequality rows tight on the face
};

/**
 * Dimension and implicit-equality closure of a face given by pinned
 * inequality rows plus arbitrary extra equalities. Uses a min-slack fast
 * path (one LP) and falls back to the per-row implicit-equality scan.
 */
inline FaceInfo face_info(const HPolytope& P, const std::vector<std::size_t>& pinned,
                          const RatMat& extra_eq = RatMat(), const RatVec& extra_rhs = RatVec()) {
    const std::size_t n = P.ambient_dim, m = P.num_inequalities();
    std::vector<bool> is_pinned(m, false);
    for (std::size_t i : pinned) {
        if (i >= m) throw BadIndexError();
        is_pinned[i] = true;
    }

    auto base_eqs = [&](Program& p, auto pad_row) {
        for (std::size_t i = 0; i < P.num_equalities(); ++i)
            p.add_eq(pad_row(P.eq_lhs.row(i)), P.eq_rhs[i]);
        for (std::size_t i = 0; i < m; ++i)
            if (is_pinned[i]) p.add_eq(pad_row(P.ineq_lhs.row(i)), P.ineq_rhs[i]);
        for (std::size_t i = 0; i < extra_eq.row_count(); ++i)
            p.add_eq(pad_row(extra_eq.row(i)), extra_rhs[i]);
    };
    auto identity_pad = [](const RatVec& r) { return r; };
    auto t_pad = [n](const RatVec& r) {
        RatVec out(n + 1);
        for (std::size_t j = 0; j < n; ++j) out[j] = r[j];
        return out;
    };

    // Fast path: maximize the minimum slack of the unpinned rows over the face.
    RatVec c(n + 1);
    c[n] = 1;
    Program fast = Program::maximize(n + 1, c);
    for (std::size_t i = 0; i < m; ++i) {
        if (is_pinned[i]) continue;
        RatVec row = t_pad(P.ineq_lhs.row(i));
        row[n] = 1;
        fast.add_ub(row, P.ineq_rhs[i]);
    }
    base_eqs(fast, t_pad);
    auto fs = solve(fast);
    if (fs.status == Status::kInfeasible) return FaceInfo{};  // pinned subspace empty
    // The slack variable is free, so the program stays feasible even when
    // the face is empty; emptiness shows up as a negative optimum instead.
    if (fs.status == Status::kOptimal && fs.value < 0) return FaceInfo{};

    FaceInfo info;
    std::vector<std::size_t> tight(pinned);
    if (fs.status == Status::kOptimal && fs.value == 0) {
        // Some unpinned row is forced tight: per-row scan.
        for (std::size_t i = 0; i < m; ++i) {
            if (is_pinned[i]) continue;
            Program p = Program::maximize(n, -P.ineq_lhs.row(i));
            for (std::size_t r2 = 0; r2 < m; ++r2)
                if (!is_pinned[r2]) p.add_ub(P.ineq_lhs.row(r2), P.ineq_rhs[r2]);
            base_eqs(p, identity_pad);
            auto s = solve(p);
            if (s.status == Status::kOptimal && s.value == -P.ineq_rhs[i]) tight.push_back(i);
        }
    }
    std::sort(tight.begin(), tight.end());
    tight.erase(std::unique(tight.begin(), tight.end()), tight.end());

    RatMat span_rows = extra_eq;
    for (std::size_t i = 0; i < P.num_equalities(); ++i) span_rows.append_row(P.eq_lhs.row(i));
    for (std::size_t i : tight) span_rows.append_row(P.ineq_lhs.row(i));
    info.dim = static_cast<long>(n) - static_cast<long>(span_rows.empty() ? 0 : rank(span_rows));
    info.tight = std::move(tight);
    return info;
}

/// Affine dimension of the face of P whose active rows are pinned tight.
inline long affine_dim(const HPolytope& P, const std::vector<std::size_t>& active) {
    return face_info(P, active).dim;
}

/// Maximal active set of the face (active rows plus all implied-tight rows).
inline std::vector<std::size_t> tight_closure(const HPolytope& P,
                                              const std::vector<std::size_t>& active) {
    return face_info(P, active).tight;
}

/**
 * Vertex of P maximizing c, ties broken by maximizing each tiebreak vector
 * in order. When the tiebreaks span the ambient space the result is the
 * unique lexicographic optimum, hence a vertex.
 */
inline RatVec lex_optimal_vertex(const HPolytope& P, const RatVec& c,
                                 const std::vector<RatVec>& tiebreaks) {
    Program p = program_over(P, c);
    auto s = solve(p);
    if (s.status == Status::kInfeasible) throw InfeasibleError();
    if (s.status == Status::kUnbounded) throw UnboundedError("lex objective unbounded");
    p.add_eq(c, s.value);
    RatVec best = s.point;
    for (const auto& tb : tiebreaks) {
        p.c = tb;
        s = solve(p);
        if (s.status == Status::kInfeasible) throw InfeasibleError();  // unreachable
        if (s.status == Status::kUnbounded) throw UnboundedError("lex tiebreak unbounded");
        p.add_eq(tb, s.value);
        best = s.point;
    }
    return best;
}

}  // namespace polyproj::lp

#endif  // POLYPROJ_LP_HPP
