#include <catch2/catch_amalgamated.hpp>

#include "polyproj/ddoracle.hpp"
#include "polyproj/fm.hpp"
#include "polyproj/gadgets.hpp"
#include "polyproj/hvproj.hpp"
#include "polyproj/vproj.hpp"
#include "support/gen.hpp"

using namespace polyproj;

namespace {

HPolytope rec_of(const HPolytope& P, const DirectionSet& G) {
    return recenter(shadow::transform_to_directions(P, G)).polytope;
}

}  // namespace

TEST_CASE("proper_intersection") {
    auto G = DirectionSet::coordinate_axes({2}, 3);
    auto rec = rec_of(gen::cube_h(3), G);
    SECTION("a facet hyperplane is not proper") {
        CHECK_FALSE(hvproj::proper_intersection(rec, 1, {RatVec{Rat(1), Rat(0)}, Rat(1)}));
    }
    SECTION("a hyperplane through the origin is proper") {
        CHECK(hvproj::proper_intersection(rec, 1, {RatVec{Rat(1), Rat(0)}, Rat(0)}));
    }
    SECTION("a missing hyperplane is not proper") {
        CHECK_FALSE(hvproj::proper_intersection(rec, 1, {RatVec{Rat(1), Rat(0)}, Rat(2)}));
    }
}

TEST_CASE("next_vertex walks past a proper hull facet") {
    // Square shadow of the cube: current hull misses (-1,-1); the hull edge
    // through (1,-1), (-1,1) has outward normal (-1,-1) and rhs 0.
    auto G = DirectionSet::coordinate_axes({2}, 3);
    auto rec = rec_of(gen::cube_h(3), G);
    hvproj::LiftedHyperplane facet{RatVec{Rat(-1), Rat(-1)}, Rat(0)};
    REQUIRE(hvproj::proper_intersection(rec, 1, facet));
    const RatVec x = hvproj::next_vertex(rec, 2, 1, facet);
    CHECK(x == RatVec{Rat(-1), Rat(-1)});
    CHECK(dot(facet.normal_proj, x) > facet.rhs);  // strict progress
}

TEST_CASE("enumerate_hv") {
    SECTION("degenerate-for-shadow directions are legal here") {
        auto G = DirectionSet::coordinate_axes({2}, 3);
        auto hv = hvproj::enumerate_hv(gen::cube_h(3), G);
        CHECK(hv.v == gen::cube_v(2));
        CHECK(hv.h == canonical_h(gen::cube_h(2)));
    }
    SECTION("hexagon: six vertices and six facets") {
        RatMat dirs{RatVec{Rat(1), Rat(1), Rat(1)}};
        auto G = DirectionSet::make(dirs, 3);
        hvproj::HvStats stats;
        auto hv = hvproj::enumerate_hv(gen::cube_h(3), G, {}, &stats);
        CHECK(hv.v.points.size() == 6);
        CHECK(hv.h.num_inequalities() == 6);
        CHECK(hv.v == vproj::project_v(oracle::h_to_v(gen::cube_h(3)), G));
        CHECK(hv.h == fm::project_fm(gen::cube_h(3), G));
        CHECK(stats.hull_calls >= 1);
        // Mutual consistency of the two output forms.
        for (const auto& v : hv.v.points) CHECK(hv.h.contains(v));
    }
    SECTION("simplex lift round trip") {
        auto Q = gen::random_v_polytope(21, 3, 6, 4, /*force_full_dim=*/true);
        auto lift = gadgets::lift_to_simplex(Q);
        // The lifted simplex is flat in its big ambient space; its H-form
        // carries affine-hull equalities plus one facet per vertex.
        auto delta_h = oracle::v_to_h(lift.simplex, {}, /*allow_lower_dim=*/true);
        CHECK(delta_h.num_inequalities() == lift.simplex.points.size());
        auto setup = gadgets::prepare_split_projection(delta_h, Q.ambient_dim);
        auto hv = hvproj::enumerate_hv(setup.reduced, setup.directions);
        CHECK(hv.v == canonical_v(Q));
        CHECK(hv.h == oracle::v_to_h(Q));
    }
}

TEST_CASE("termination certificate: final hull facets are all improper", "[property]") {
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 3 + trial % 3, k = 1 + trial % 2;
        auto P = gen::random_h_polytope(23000 + trial, n, 9);
        auto G = gadgets::sample_directions(n, k, 24000 + trial, 6);
        if (G.d() < 1) continue;
        auto hv = hvproj::enumerate_hv(P, G);
        for (const Rat& margin : hvproj::completeness_margins(P, G, hv.h))
            CHECK(margin <= 0);
        // Dropping any vertex breaks the certificate.
        if (hv.v.points.size() > static_cast<std::size_t>(G.d()) + 1) {
            for (std::size_t drop = 0; drop < hv.v.points.size(); ++drop) {
                std::vector<RatVec> rest;
                for (std::size_t i = 0; i < hv.v.points.size(); ++i)
                    if (i != drop) rest.push_back(hv.v.points[i]);
                if (affine_dim_of_points(rest) < static_cast<long>(G.d())) continue;
                auto hull = oracle::v_to_h(VPolytope(rest, G.d()));
                bool some_proper = false;
                for (const Rat& m : hvproj::completeness_margins(P, G, hull))
                    some_proper |= (m > 0);
                CHECK(some_proper);
            }
        }
    }
}

TEST_CASE("vertex count grows monotonically to the full shadow", "[property]") {
    for (int trial = 0; trial < 4; ++trial) {
        auto P = gen::random_h_polytope(25000 + trial, 4, 9);
        auto G = gadgets::sample_directions(4, 2, 26000 + trial, 6);
        hvproj::HvStats stats;
        auto hv = hvproj::enumerate_hv(P, G, {}, &stats);
        CHECK(stats.vertices == hv.v.points.size());
        // Against the trivial pipeline on the oracle's vertices.
        CHECK(hv.v == vproj::project_v(oracle::h_to_v(P), G));
    }
}
