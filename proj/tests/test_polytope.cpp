#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "polyproj/canon.hpp"
#include "polyproj/io.hpp"
#include "support/gen.hpp"

using namespace polyproj;

TEST_CASE("recenter the shifted cube") {
    // 0 <= z_i <= 2, written as z_i <= 2 and -z_i <= 0.
    RatMat A;
    RatVec b(6);
    for (std::size_t j = 0; j < 3; ++j) {
        RatVec e(3);
        e[j] = 1;
        A.append_row(e);
        b[2 * j] = 2;
        A.append_row(-e);
        b[2 * j + 1] = 0;
    }
    auto res = recenter(HPolytope::from_inequalities(std::move(A), std::move(b), 3));
    CHECK(res.translation == RatVec{Rat(1), Rat(1), Rat(1)});
    CHECK(canonical_h(res.polytope) == canonical_h(gen::cube_h(3)));
    for (std::size_t i = 0; i < res.polytope.num_inequalities(); ++i)
        CHECK(res.polytope.ineq_rhs[i] == 1);
}

TEST_CASE("recenter is the identity on the centered cube") {
    auto cube = gen::cube_h(3);
    auto res = recenter(cube);
    CHECK(res.translation == RatVec{Rat(0), Rat(0), Rat(0)});
    CHECK(res.polytope == cube);
}

TEST_CASE("recenter rejects lower-dimensional input") {
    RatMat A{RatVec{Rat(1), Rat(0)}, RatVec{Rat(-1), Rat(0)}};
    auto P = HPolytope::from_inequalities(std::move(A), RatVec{Rat(0), Rat(0)}, 2);
    CHECK_THROWS_AS(recenter(P), NotFullDimensionalError);
}

TEST_CASE("recenter preserves membership up to translation", "[property]") {
    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto P = gen::random_h_polytope(1000 + trial, 2 + trial % 3, 6 + trial % 5);
        auto res = recenter(P);
        for (int s = 0; s < 25; ++s) {
            RatVec p(P.ambient_dim);
            for (std::size_t j = 0; j < p.dim(); ++j)
                p[j] = rat_from_parts(static_cast<long>(eng() % 9) - 4,
                                      1 + static_cast<long>(eng() % 3));
            CHECK(P.contains(p) == res.polytope.contains(p - res.translation));
        }
    }
}

TEST_CASE("canonical H-form") {
    SECTION("scaling and weak duplicates collapse") {
        RatMat A{RatVec{Rat(1)}, RatVec{Rat(2)}, RatVec{Rat(-1)}};
        auto P = HPolytope::from_inequalities(std::move(A), RatVec{Rat(1), Rat(2), Rat(0)}, 1);
        auto C = canonical_h(P);
        REQUIRE(C.num_inequalities() == 2);
        CHECK(C.ineq_lhs.row(0) == RatVec{Rat(-1)});
        CHECK(C.ineq_rhs[0] == 0);
        CHECK(C.ineq_lhs.row(1) == RatVec{Rat(1)});
        CHECK(C.ineq_rhs[1] == 1);
    }
    SECTION("duplicated cube facets") {
        auto cube = gen::cube_h(3);
        RatMat A = cube.ineq_lhs;
        RatVec b(8);
        for (std::size_t i = 0; i < 6; ++i) b[i] = cube.ineq_rhs[i];
        A.append_row(cube.ineq_lhs.row(0));
        b[6] = 1;
        A.append_row(Rat(3) * cube.ineq_lhs.row(1));
        b[7] = 3;
        auto C = canonical_h(HPolytope::from_inequalities(std::move(A), std::move(b), 3));
        CHECK(C.num_inequalities() == 6);
        CHECK(C == canonical_h(cube));
    }
    SECTION("redundant diagonal row removed") {
        RatMat A{RatVec{Rat(1), Rat(1)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)},
                 RatVec{Rat(-1), Rat(0)}, RatVec{Rat(0), Rat(-1)}};
        auto P = HPolytope::from_inequalities(
            std::move(A), RatVec{Rat(2), Rat(1), Rat(1), Rat(0), Rat(0)}, 2);
        auto C = canonical_h(P);
        CHECK(C.num_inequalities() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(C.ineq_lhs.row(i) != RatVec{Rat(1), Rat(1)});
    }
    SECTION("lower-dimensional input is rejected") {
        RatMat A{RatVec{Rat(1)}, RatVec{Rat(-1)}};
        auto P = HPolytope::from_inequalities(std::move(A), RatVec{Rat(0), Rat(0)}, 1);
        CHECK_THROWS_AS(canonical_h(P), NotFullDimensionalError);
    }
}

TEST_CASE("canonical V-form") {
    SECTION("interior combination removed") {
        VPolytope Q({RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)},
                     RatVec{rat_from_parts(1, 4), rat_from_parts(1, 4)}},
                    2);
        auto C = canonical_v(Q);
        REQUIRE(C.points.size() == 3);
        CHECK(C.points[0] == RatVec{Rat(0), Rat(0)});
    }
    SECTION("cube corners plus centroid") {
        auto Q = gen::cube_v(3);
        auto with_centroid = Q;
        with_centroid.points.push_back(RatVec{Rat(0), Rat(0), Rat(0)});
        CHECK(canonical_v(with_centroid) == Q);
        CHECK(Q.points.size() == 8);
    }
    SECTION("single point") {
        VPolytope Q({RatVec{Rat(2), Rat(3)}}, 2);
        CHECK(canonical_v(Q).points.size() == 1);
    }
}

TEST_CASE("canonical forms are idempotent", "[property]") {
    for (int trial = 0; trial < 10; ++trial) {
        auto P = gen::random_h_polytope(500 + trial, 2 + trial % 3, 7);
        auto C = canonical_h(P);
        CHECK(canonical_h(C) == C);
        auto Q = gen::random_v_polytope(800 + trial, 2 + trial % 3, 7);
        CHECK(canonical_v(Q) == Q);
    }
}

TEST_CASE("H-file and V-file round trips are byte exact") {
    auto cube = canonical_h(gen::cube_h(3));
    const std::string text = io::h_to_string(cube);
    std::istringstream in(text);
    auto parsed = io::read_polyfile(in, "cube");
    REQUIRE(parsed.is_h);
    CHECK(parsed.h == cube);
    CHECK(io::h_to_string(parsed.h) == text);

    auto corners = gen::cube_v(2);
    const std::string vtext = io::v_to_string(corners);
    std::istringstream vin(vtext);
    auto vparsed = io::read_polyfile(vin, "corners");
    REQUIRE_FALSE(vparsed.is_h);
    CHECK(VPolytope(vparsed.v.points, vparsed.v.ambient_dim) == corners);
    CHECK(io::v_to_string(VPolytope(vparsed.v.points, vparsed.v.ambient_dim)) == vtext);
}

TEST_CASE("H-file linearity rows become equalities") {
    const std::string text =
        "H-representation\n"
        "linearity 1 3\n"
        "begin\n"
        " 3 3 rational\n"
        " 1 -1 0\n"
        " 1 0 -1\n"
        " 1/2 -1 -1\n"
        "end\n";
    std::istringstream in(text);
    auto parsed = io::read_polyfile(in, "mixed");
    REQUIRE(parsed.is_h);
    CHECK(parsed.h.num_inequalities() == 2);
    REQUIRE(parsed.h.num_equalities() == 1);
    CHECK(parsed.h.eq_lhs.row(0) == RatVec{Rat(1), Rat(1)});
    CHECK(parsed.h.eq_rhs[0] == rat_from_parts(1, 2));
    // Writer puts equalities last and renumbers the linearity line.
    const std::string round = io::h_to_string(parsed.h);
    std::istringstream in2(round);
    auto again = io::read_polyfile(in2, "mixed2");
    CHECK(again.h == parsed.h);
}

TEST_CASE("decimal literals parse exactly") {
    const std::string text =
        "V-representation\nbegin\n 1 3 rational\n 1 0.25 -1.5\nend\n";
    std::istringstream in(text);
    auto parsed = io::read_polyfile(in, "decimals");
    CHECK(parsed.v.points[0] == RatVec{rat_from_parts(1, 4), rat_from_parts(-3, 2)});
}

TEST_CASE("V-file ray rows are kept separate") {
    const std::string text =
        "V-representation\nbegin\n 3 3 rational\n 1 0 0\n 0 1 1\n 0 -1 1\nend\n";
    std::istringstream in(text);
    auto parsed = io::read_polyfile(in, "rays");
    CHECK(parsed.v.points.size() == 1);
    CHECK(parsed.v.rays.size() == 2);
}

TEST_CASE("direction sets validate their input") {
    RatMat ok{RatVec{Rat(1), Rat(1), Rat(0)}, RatVec{Rat(1), Rat(-1), Rat(0)}};
    auto g = DirectionSet::make(ok, 3);
    CHECK(g.k() == 2);
    CHECK(g.d() == 1);
    CHECK(g.project_point(RatVec{Rat(1), Rat(2), Rat(3)}).dim() == 1);
    RatMat skew{RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1)}};
    CHECK_THROWS_AS(DirectionSet::make(skew, 2), NotOrthogonalError);

    // Stacked basis is exactly invertible via orthogonality.
    auto T = g.stacked();
    auto Tinv = g.stacked_inverse();
    CHECK(T.multiplied(Tinv) == RatMat::identity(3));
}

TEST_CASE("malformed files are rejected with parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return io::read_polyfile(in, "bad");
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("H-representation\n 1 2 rational\n"), ParseError);  // no begin
    CHECK_THROWS_AS(parse("H-representation\nbegin\n 2 2 rational\n 1 -1\nend\n"),
                    ParseError);  // truncated rows
    CHECK_THROWS_AS(parse("H-representation\nbegin\n 1 2 rational\n 1 -1 3\nend\n"),
                    ParseError);  // too many fields
    CHECK_THROWS_AS(parse("V-representation\nbegin\n 1 2 rational\n 2 0\nend\n"),
                    ParseError);  // leading marker must be 0 or 1
    CHECK_THROWS_AS(parse("V-representation\nlinearity 1 1\nbegin\n 1 2 rational\n 1 0\nend\n"),
                    ParseError);  // linearity is H-only
}

TEST_CASE("zero direction rows are dependent") {
    RatMat g{RatVec{Rat(0), Rat(0)}};
    CHECK_THROWS_AS(DirectionSet::make(g, 2), DependentDirectionsError);
}
