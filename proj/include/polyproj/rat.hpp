/**
 * Exact rational scalars, vectors and matrices. Every geometric computation
 * in this library runs on these types; there is no floating point anywhere.
 */

#ifndef POLYPROJ_RAT_HPP
#define POLYPROJ_RAT_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "polyproj/errors.hpp"

namespace polyproj {

// GMP-backed arbitrary-precision rational. Arithmetic keeps values in
// canonical form (reduced, positive denominator) as long as every value is
// constructed through the helpers below; the raw string constructor of
// mpq_rational does NOT canonicalize and must not be used.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Canonical rational from an integer pair. Throws on zero denominator.
inline Rat rat_from_parts(const Int& num, const Int& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rat(num, den);  // the mpz pair constructor canonicalizes
}

/**
 * Parse "p/q", "p", or a decimal literal ("-3.25" becomes -13/4, exactly).
 * Whitespace is not accepted; the caller tokenizes.
 */
inline Rat parse_rat(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    if (tok.empty()) throw ParseError("empty rational token");
    const std::string s(tok);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (slash == 0 || slash + 1 >= s.size())
            throw ParseError("malformed rational '" + s + "'");
        try {
            return rat_from_parts(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError("malformed rational '" + s + "'");
        }
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            return Rat(Int(s));
        } catch (const std::exception&) {
            throw ParseError("malformed integer '" + s + "'");
        }
    }
    // Decimal literal: sign and integer part, then fractional digits.
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (frac.empty()) frac = "0";
    if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed decimal '" + s + "'");
    try {
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int whole(head);
        Int num = whole * scale + (whole < 0 || head[0] == '-' ? -Int(frac) : Int(frac));
        return rat_from_parts(num, scale);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed decimal '" + s + "'");
    }
}

/// Serialize as "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline int sign(const Rat& r) { return r.sign(); }

/**
 * Dense rational vector. Arithmetic is only defined between vectors of the
 * same dimension and throws DimensionMismatch otherwise.
 */
class RatVec {
  public:
    RatVec() = default;
    explicit RatVec(std::size_t dim) : e_(dim) {}
    RatVec(std::initializer_list<Rat> init) : e_(init) {}
    explicit RatVec(std::vector<Rat> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    const Rat& operator[](std::size_t i) const { return e_[i]; }
    Rat& operator[](std::size_t i) { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    const std::vector<Rat>& entries() const { return e_; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r == 0; });
    }

    RatVec& operator+=(const RatVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    RatVec& operator-=(const RatVec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    RatVec& operator*=(const Rat& s) {
        for (auto& x : e_) x *= s;
        return *this;
    }

    friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
    friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
    friend RatVec operator*(const Rat& s, RatVec v) { return v *= s; }
    friend RatVec operator-(RatVec v) {
        for (auto& x : v.e_) x = -x;
        return v;
    }

    friend bool operator==(const RatVec& a, const RatVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RatVec& a, const RatVec& b) { return a.e_ != b.e_; }

  private:
    void check_dim(const RatVec& o) const {
        if (e_.size() != o.e_.size())
            throw DimensionMismatchError("vector dims " + std::to_string(e_.size()) +
                                         " vs " + std::to_string(o.e_.size()));
    }
    std::vector<Rat> e_;
};

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("dot of unequal dims");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Strict lexicographic order; total on equal-dim vectors, shorter dims first.
inline bool lex_less(const RatVec& a, const RatVec& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct RatVecLexLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

inline std::ostream& operator<<(std::ostream& os, const RatVec& v) {
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os << ")";
}

/**
 * Rectangular matrix stored as rows. Row access is cheap; there is no
 * column-major view, callers slice columns explicitly where needed.
 */
class RatMat {
  public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, RatVec(cols)) {}
    RatMat(std::initializer_list<RatVec> rows) {
        for (const auto& r : rows) append_row(r);
    }

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
        return m;
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const RatVec& row(std::size_t i) const { return rows_[i]; }
    RatVec& row(std::size_t i) { return rows_[i]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    const std::vector<RatVec>& rows() const { return rows_; }

    void append_row(const RatVec& r) {
        if (rows_.empty()) cols_ = r.dim();
        else if (r.dim() != cols_)
            throw DimensionMismatchError("appending row of dim " + std::to_string(r.dim()) +
                                         " to matrix with " + std::to_string(cols_) + " columns");
        rows_.push_back(r);
    }

    RatVec apply(const RatVec& x) const {
        if (x.dim() != cols_) throw DimensionMismatchError("matrix-vector dims");
        RatVec y(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
        return y;
    }

    /// xᵀM for a row-vector x, i.e. apply the transpose.
    RatVec apply_transposed(const RatVec& x) const {
        if (x.dim() != rows_.size()) throw DimensionMismatchError("transpose apply dims");
        RatVec y(cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * rows_[i][j];
        }
        return y;
    }

    RatMat transposed() const {
        RatMat t(cols_, rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
        return t;
    }

    RatMat multiplied(const RatMat& other) const {
        if (cols_ != other.row_count()) throw DimensionMismatchError("matrix product dims");
        RatMat out(rows_.size(), other.col_count());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = rows_[i][k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.col_count(); ++j)
                    out(i, j) += a * other(k, j);
            }
        return out;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

  private:
    std::size_t cols_ = 0;
    std::vector<RatVec> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const RatMat& m) {
    os << "[";
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        if (i) os << "; ";
        os << m.row(i);
    }
    return os << "]";
}

/**
 * The unique integer vector parallel to v with the same orientation and
 * coordinate gcd 1. Throws ZeroVector for v = 0.
 */
inline RatVec primitive(const RatVec& v) {
    if (v.is_zero()) throw ZeroVectorError();
    Int den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
    Int g = 0;
    std::vector<Int> scaled(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        scaled[i] = numerator(v[i]) * (den_lcm / denominator(v[i]));
        g = gcd(g, scaled[i]);
    }
    RatVec out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rat(scaled[i] / g);
    return out;
}

/// Primitive with the first nonzero entry positive (canonical line direction).
inline RatVec primitive_signed(const RatVec& v) {
    RatVec p = primitive(v);
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] != 0) {
            if (p[i] < 0) p = -p;
            break;
        }
    }
    return p;
}

}  // namespace polyproj

#endif  // POLYPROJ_RAT_HPP
