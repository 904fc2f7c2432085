#include <catch2/catch_amalgamated.hpp>

#include "polyproj/ddoracle.hpp"
#include "polyproj/gadgets.hpp"
#include "polyproj/vproj.hpp"
#include "support/gen.hpp"

using namespace polyproj;

TEST_CASE("project_points maps to complement coordinates") {
    SECTION("cube corners along e3 fold in pairs") {
        auto G = DirectionSet::coordinate_axes({2}, 3);
        auto pts = vproj::project_points(gen::cube_v(3), G);
        REQUIRE(pts.size() == 8);
        std::set<RatVec, RatVecLexLess> distinct(pts.begin(), pts.end());
        CHECK(distinct.size() == 4);
    }
    SECTION("empty direction set is the identity") {
        auto Q = gen::cube_v(2);
        auto pts = vproj::project_points(Q, DirectionSet::identity(2));
        CHECK(pts == Q.points);
    }
    SECTION("points parallel to the directions collapse to the origin") {
        RatMat dirs{RatVec{Rat(1), Rat(1), Rat(1)}};
        auto G = DirectionSet::make(dirs, 3);
        VPolytope Q({RatVec{Rat(1), Rat(1), Rat(1)}, RatVec{Rat(-1), Rat(-1), Rat(-1)}}, 3);
        auto pts = vproj::project_points(Q, G);
        CHECK(pts[0] == RatVec{Rat(0), Rat(0)});
        CHECK(pts[1] == RatVec{Rat(0), Rat(0)});
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(vproj::project_points(gen::cube_v(2), DirectionSet::identity(3)),
                        DimensionMismatchError);
    }
}

TEST_CASE("project_v returns exactly the shadow vertices") {
    SECTION("cube along e3") {
        auto G = DirectionSet::coordinate_axes({2}, 3);
        CHECK(vproj::project_v(gen::cube_v(3), G) == gen::cube_v(2));
    }
    SECTION("cube along the diagonal: hexagon from 6 of 8 corners") {
        RatMat dirs{RatVec{Rat(1), Rat(1), Rat(1)}};
        auto G = DirectionSet::make(dirs, 3);
        auto V = vproj::project_v(gen::cube_v(3), G);
        // Independent check: brute-force hull of the 8 projected points.
        auto raw = vproj::project_points(gen::cube_v(3), G);
        auto hull_h = oracle::v_to_h(canonical_v(VPolytope(raw, 2)));
        CHECK(V.points.size() == 6);
        CHECK(oracle::h_to_v(hull_h) == V);
        // The two diagonal corners project to the interior origin.
        for (const auto& p : V.points) CHECK(p != RatVec{Rat(0), Rat(0)});
    }
    SECTION("simplex lift round trip") {
        auto Q = gen::random_v_polytope(11, 2, 5);
        auto lift = gadgets::lift_to_simplex(Q);
        CHECK(vproj::project_v(lift.simplex, lift.directions) == canonical_v(Q));
    }
}

TEST_CASE("projected vertices are a subset with convex-combination certificates", "[property]") {
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 3;
        auto Q = gen::random_v_polytope(7100 + trial, n, 7);
        auto G = gadgets::sample_directions(n, 1 + trial % n, 7200 + trial, 4);
        if (G.d() == 0) continue;
        auto raw = vproj::project_points(Q, G);
        auto V = vproj::project_v(Q, G);
        std::set<RatVec, RatVecLexLess> kept(V.points.begin(), V.points.end());
        for (const auto& p : raw) {
            if (kept.count(p)) continue;
            CHECK(gadgets::in_hull(V.points, p));  // excluded points are combinations
        }
        for (const auto& v : V.points) CHECK(kept.count(v) == 1);
    }
}

TEST_CASE("composing coordinate projections equals the combined projection", "[property]") {
    // Axis-aligned splits compose exactly: dropping {a} then {b} equals
    // dropping {a, b} once (intermediate coordinates stay aligned).
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 4;
        auto Q = gen::random_v_polytope(7300 + trial, n, 8);
        auto G_first = DirectionSet::coordinate_axes({3}, 4);
        auto mid = vproj::project_v(Q, G_first);
        auto G_second = DirectionSet::coordinate_axes({2}, 3);
        auto two_step = vproj::project_v(mid, G_second);
        auto G_both = DirectionSet::coordinate_axes({2, 3}, 4);
        CHECK(two_step == vproj::project_v(Q, G_both));
    }
}
