/**
 * cdd-style polyhedra files.
 *
 * H-file:   "H-representation", optional "linearity e i1 ... ie", "begin",
 *           "m n+1 rational", m rows "b -a_1 ... -a_n" meaning a.z <= b
 *           (equality rows for the listed 1-based indices), "end".
 * V-file:   "V-representation", "begin", "m n+1 rational", rows
 *           "1 v_1 ... v_n" for points or "0 r_1 ... r_n" for rays (rays are
 *           legal only where cones are expected), "end".
 * Directions file: k lines of n whitespace-separated rationals.
 *
 * Numbers parse as "p/q", "p", or exact decimals; output is always "p/q"
 * or "p". Writers are byte-deterministic.
 */

#ifndef POLYPROJ_IO_HPP
#define POLYPROJ_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyproj/polytope.hpp"
#include "polyproj/rat.hpp"

namespace polyproj::io {

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline bool next_meaningful_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '*' || toks[0][0] == '#') continue;  // comment
        return true;
    }
    return false;
}

}  // namespace detail

/// Parsed V-file: points always, rays only where cones are legal input.
struct VFileData {
    std::vector<RatVec> points;
    std::vector<RatVec> rays;
    std::size_t ambient_dim = 0;
};

struct PolyFile {
    bool is_h = false;
    HPolytope h;
    VFileData v;
};

inline PolyFile read_polyfile(std::istream& in, const std::string& what = "input") {
    std::string line;
    if (!detail::next_meaningful_line(in, line))
        throw ParseError(what + ": empty file");
    auto toks = detail::tokens(line);
    PolyFile out;
    if (toks[0] == "H-representation") out.is_h = true;
    else if (toks[0] == "V-representation") out.is_h = false;
    else throw ParseError(what + ": expected H-representation or V-representation");

    std::vector<std::size_t> linearity;
    if (!detail::next_meaningful_line(in, line)) throw ParseError(what + ": truncated file");
    toks = detail::tokens(line);
    if (toks[0] == "linearity") {
        if (!out.is_h) throw ParseError(what + ": linearity is only valid in H-files");
        if (toks.size() < 2) throw ParseError(what + ": malformed linearity line");
        const std::size_t cnt = std::stoul(toks[1]);
        if (toks.size() != cnt + 2) throw ParseError(what + ": malformed linearity line");
        for (std::size_t i = 0; i < cnt; ++i) linearity.push_back(std::stoul(toks[2 + i]));
        if (!detail::next_meaningful_line(in, line)) throw ParseError(what + ": truncated file");
        toks = detail::tokens(line);
    }
    if (toks[0] != "begin") throw ParseError(what + ": expected begin");

    if (!detail::next_meaningful_line(in, line)) throw ParseError(what + ": truncated file");
    toks = detail::tokens(line);
    if (toks.size() < 2) throw ParseError(what + ": malformed size line");
    const std::size_t m = std::stoul(toks[0]);
    const std::size_t w = std::stoul(toks[1]);
    if (w < 1) throw ParseError(what + ": width must be at least 1");
    const std::size_t n = w - 1;

    std::vector<RatVec> raw(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!detail::next_meaningful_line(in, line)) throw ParseError(what + ": truncated rows");
        toks = detail::tokens(line);
        if (toks.size() != w) throw ParseError(what + ": row " + std::to_string(i + 1) +
                                               " has " + std::to_string(toks.size()) +
                                               " fields, expected " + std::to_string(w));
        RatVec row(w);
        for (std::size_t j = 0; j < w; ++j) row[j] = parse_rat(toks[j]);
        raw[i] = std::move(row);
    }
    if (!detail::next_meaningful_line(in, line) || detail::tokens(line)[0] != "end")
        throw ParseError(what + ": expected end");

    if (out.is_h) {
        std::vector<bool> is_eq(m, false);
        for (std::size_t idx : linearity) {
            if (idx < 1 || idx > m) throw ParseError(what + ": linearity index out of range");
            is_eq[idx - 1] = true;
        }
        RatMat A, E;
        std::vector<Rat> b, e;
        for (std::size_t i = 0; i < m; ++i) {
            RatVec a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = -raw[i][j + 1];  // row is b, -a
            if (is_eq[i]) {
                E.append_row(a);
                e.push_back(raw[i][0]);
            } else {
                A.append_row(a);
                b.push_back(raw[i][0]);
            }
        }
        out.h = HPolytope::with_equalities(std::move(A), RatVec(std::move(b)), std::move(E),
                                           RatVec(std::move(e)), n);
    } else {
        out.v.ambient_dim = n;
        for (std::size_t i = 0; i < m; ++i) {
            RatVec p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = raw[i][j + 1];
            if (raw[i][0] == 1) out.v.points.push_back(std::move(p));
            else if (raw[i][0] == 0) out.v.rays.push_back(std::move(p));
            else throw ParseError(what + ": V-file row must start with 0 or 1");
        }
    }
    return out;
}

inline PolyFile read_polyfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_polyfile(in, path);
}

inline void write_h(std::ostream& os, const HPolytope& P) {
    os << "H-representation\n";
    const std::size_t m = P.num_inequalities(), e = P.num_equalities();
    if (e > 0) {
        os << "linearity " << e;
        for (std::size_t i = 0; i < e; ++i) os << " " << (m + i + 1);  // equalities written last
        os << "\n";
    }
    os << "begin\n " << (m + e) << " " << (P.ambient_dim + 1) << " rational\n";
    auto row = [&](const RatVec& a, const Rat& b) {
        os << " " << rat_to_string(b);
        for (std::size_t j = 0; j < P.ambient_dim; ++j) os << " " << rat_to_string(-a[j]);
        os << "\n";
    };
    for (std::size_t i = 0; i < m; ++i) row(P.ineq_lhs.row(i), P.ineq_rhs[i]);
    for (std::size_t i = 0; i < e; ++i) row(P.eq_lhs.row(i), P.eq_rhs[i]);
    os << "end\n";
}

inline void write_v(std::ostream& os, const VPolytope& Q,
                    const std::vector<RatVec>& rays = {}) {
    os << "V-representation\nbegin\n " << (Q.points.size() + rays.size()) << " "
       << (Q.ambient_dim + 1) << " rational\n";
    for (const auto& p : Q.points) {
        os << " 1";
        for (std::size_t j = 0; j < Q.ambient_dim; ++j) os << " " << rat_to_string(p[j]);
        os << "\n";
    }
    for (const auto& r : rays) {
        os << " 0";
        for (std::size_t j = 0; j < r.dim(); ++j) os << " " << rat_to_string(r[j]);
        os << "\n";
    }
    os << "end\n";
}

inline std::string h_to_string(const HPolytope& P) {
    std::ostringstream os;
    write_h(os, P);
    return os.str();
}

inline std::string v_to_string(const VPolytope& Q, const std::vector<RatVec>& rays = {}) {
    std::ostringstream os;
    write_v(os, Q, rays);
    return os.str();
}

/// Directions file: k lines, n rationals each.
inline RatMat read_directions(std::istream& in, const std::string& what = "directions") {
    RatMat dirs;
    std::string line;
    while (detail::next_meaningful_line(in, line)) {
        const auto toks = detail::tokens(line);
        RatVec v(toks.size());
        for (std::size_t j = 0; j < toks.size(); ++j) v[j] = parse_rat(toks[j]);
        dirs.append_row(v);  // throws DimensionMismatch on ragged rows
    }
    if (dirs.row_count() == 0) throw ParseError(what + ": no direction rows");
    return dirs;
}

inline RatMat read_directions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_directions(in, path);
}

inline void write_directions(std::ostream& os, const RatMat& dirs) {
    for (std::size_t i = 0; i < dirs.row_count(); ++i) {
        for (std::size_t j = 0; j < dirs.col_count(); ++j) {
            if (j) os << " ";
            os << rat_to_string(dirs(i, j));
        }
        os << "\n";
    }
}

}  // namespace polyproj::io

#endif  // POLYPROJ_IO_HPP
