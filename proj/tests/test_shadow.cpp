#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "polyproj/ddoracle.hpp"
#include "polyproj/fm.hpp"
#include "polyproj/gadgets.hpp"
#include "polyproj/hvproj.hpp"
#include "polyproj/shadow.hpp"
#include "polyproj/vproj.hpp"
#include "support/gen.hpp"

using namespace polyproj;

namespace {

HPolytope rec_of(const HPolytope& P, const DirectionSet& G) {
    return recenter(shadow::transform_to_directions(P, G)).polytope;
}

DirectionSet diag3() {
    RatMat dirs{RatVec{Rat(1), Rat(1), Rat(1)}};
    return DirectionSet::make(dirs, 3);
}

/// Facets of the hexagon shadow of the cube, via the brute-force oracle.
HPolytope hexagon_oracle(const DirectionSet& G) {
    return oracle::v_to_h(vproj::project_v(oracle::h_to_v(gen::cube_h(3)), G));
}

bool is_row_of(const HPolytope& H, const RatVec& lhs, const Rat& rhs) {
    auto pr = polyproj::detail::primitive_row(lhs, rhs);
    for (std::size_t i = 0; i < H.num_inequalities(); ++i) {
        if (H.ineq_lhs.row(i) == pr.first && H.ineq_rhs[i] == pr.second) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("initial_facet finds a genuine shadow facet") {
    SECTION("hexagon edge from the diagonal projection") {
        auto G = diag3();
        auto rec = rec_of(gen::cube_h(3), G);
        const RatVec alpha = shadow::initial_facet(rec, 2, 1);
        CHECK(is_row_of(hexagon_oracle(G), alpha, Rat(1)));
    }
    SECTION("square with no directions: the ray exit facet, exactly") {
        auto G = DirectionSet::identity(2);
        auto rec = rec_of(gen::cube_h(2), G);
        const RatVec alpha = shadow::initial_facet(rec, 2, 0);
        // Independent ray arithmetic: the first deterministic ray is
        // (1, 7919/7920); it exits the square through x = 1.
        const RatVec r{Rat(1), rat_from_parts(7919, 7920)};
        Rat best_t;
        std::size_t exit_row = 0;
        bool first = true;
        for (std::size_t i = 0; i < rec.num_inequalities(); ++i) {
            const Rat ar = dot(rec.ineq_lhs.row(i), r);
            if (ar <= 0) continue;
            const Rat t = rec.ineq_rhs[i] / ar;
            if (first || t < best_t) {
                best_t = t;
                exit_row = i;
                first = false;
            }
        }
        CHECK(alpha == rec.ineq_lhs.row(exit_row));
        CHECK(alpha == RatVec{Rat(1), Rat(0)});
    }
    SECTION("coordinate-axis directions on the cube are degenerate") {
        auto G = DirectionSet::coordinate_axes({2}, 3);
        auto rec = rec_of(gen::cube_h(3), G);
        CHECK_THROWS_AS(shadow::initial_facet(rec, 2, 1), DegenerateDirectionsError);
    }
}

TEST_CASE("preimage_facets") {
    SECTION("hexagon facet pre-images are cube edges") {
        auto G = diag3();
        auto rec = rec_of(gen::cube_h(3), G);
        auto hex = hexagon_oracle(G);
        for (std::size_t i = 0; i < hex.num_inequalities(); ++i) {
            // Rescale the canonical facet row to right-hand side 1.
            RatVec alpha = (Rat(1) / hex.ineq_rhs[i]) * hex.ineq_lhs.row(i);
            auto pre = shadow::preimage_facets(rec, 2, 1, alpha);
            CHECK(pre.active.size() == 2);  // an edge of the cube
            CHECK(lp::affine_dim(rec, pre.active) == 1);
        }
    }
    SECTION("identity projection: the facet is its own pre-image") {
        auto G = DirectionSet::identity(2);
        auto rec = rec_of(gen::cube_h(2), G);
        auto pre = shadow::preimage_facets(rec, 2, 0, RatVec{Rat(1), Rat(0)});
        REQUIRE(pre.active.size() == 1);
        CHECK(rec.ineq_lhs.row(pre.active[0]) == RatVec{Rat(1), Rat(0)});
    }
    SECTION("supporting non-facet hyperplane trips the dimension check") {
        auto G = diag3();
        auto rec = rec_of(gen::cube_h(3), G);
        auto hex = hexagon_oracle(G);
        const auto verts = oracle::h_to_v(hex);
        // Average the two facet normals meeting at a hexagon vertex: the
        // result supports the shadow only at that vertex (pre-image dim 0).
        const RatVec& v = verts.points[0];
        std::vector<RatVec> tight;
        for (std::size_t i = 0; i < hex.num_inequalities(); ++i) {
            if (dot(hex.ineq_lhs.row(i), v) == hex.ineq_rhs[i])
                tight.push_back((Rat(1) / hex.ineq_rhs[i]) * hex.ineq_lhs.row(i));
        }
        REQUIRE(tight.size() == 2);
        const RatVec mixed = rat_from_parts(1, 2) * (tight[0] + tight[1]);
        CHECK_THROWS_AS(shadow::preimage_facets(rec, 2, 1, mixed), DegeneracyDetectedError);
    }
}

TEST_CASE("ridge_candidates") {
    SECTION("a segment pre-image has exactly its two endpoints") {
        auto G = diag3();
        auto rec = rec_of(gen::cube_h(3), G);
        const RatVec alpha = shadow::initial_facet(rec, 2, 1);
        auto pre = shadow::preimage_facets(rec, 2, 1, alpha);
        auto cands = shadow::ridge_candidates(rec, 2, pre);
        REQUIRE(cands.size() == 2);
        for (const auto& c : cands) CHECK(lp::affine_dim(rec, c.active) == 0);
    }
    SECTION("square facet endpoints") {
        auto G = DirectionSet::identity(2);
        auto rec = rec_of(gen::cube_h(2), G);
        auto pre = shadow::preimage_facets(rec, 2, 0, RatVec{Rat(1), Rat(0)});
        auto cands = shadow::ridge_candidates(rec, 2, pre);
        REQUIRE(cands.size() == 2);
        std::set<std::vector<std::size_t>> seen;
        for (const auto& c : cands) seen.insert(c.active);
        // Rows: x<=1 is row 0, y<=1 row 2, -y<=1 row 3 (interleaved layout).
        CHECK(seen.count({0, 2}) == 1);
        CHECK(seen.count({0, 3}) == 1);
    }
    SECTION("d = 2 always yields exactly two candidates") {
        for (int trial = 0; trial < 5; ++trial) {
            auto P = gen::random_h_polytope(15000 + trial, 4, 9);
            auto G = gadgets::sample_directions(4, 2, 16000 + trial, 5);
            auto rec = rec_of(P, G);
            RatVec alpha;
            try {
                alpha = shadow::initial_facet(rec, 2, 2);
            } catch (const DegenerateDirectionsError&) {
                continue;
            }
            auto pre = shadow::preimage_facets(rec, 2, 2, alpha);
            CHECK(shadow::ridge_candidates(rec, 2, pre).size() == 2);
        }
    }
}

TEST_CASE("ridge_segment") {
    SECTION("square vertex supports the two incident facet normals") {
        auto G = DirectionSet::identity(2);
        auto rec = rec_of(gen::cube_h(2), G);
        auto seg = shadow::ridge_segment(rec, 2, 0, shadow::FaceRef{{0, 2}});  // vertex (1,1)
        REQUIRE(seg.kind == shadow::NormalSegment::Kind::kSegment);
        CHECK(seg.alpha_lo == RatVec{Rat(0), Rat(1)});
        CHECK(seg.alpha_hi == RatVec{Rat(1), Rat(0)});
    }
    SECTION("cube vertices under the diagonal projection") {
        auto G = diag3();
        auto rec = rec_of(gen::cube_h(3), G);
        auto hex = hexagon_oracle(G);
        const auto hex_verts = oracle::h_to_v(hex);
        const auto cube_verts = oracle::h_to_v(gen::cube_h(3));
        const RatMat T = G.stacked();
        for (const auto& w : cube_verts.points) {
            const RatVec u = T.apply(w);
            const RatVec x = G.project_point(w);
            std::vector<std::size_t> tight;
            for (std::size_t i = 0; i < rec.num_inequalities(); ++i)
                if (rec.slack(i, u) == 0) tight.push_back(i);
            auto seg = shadow::ridge_segment(rec, 2, 1, shadow::FaceRef{tight});
            if (x == RatVec{Rat(0), Rat(0)}) {
                // (1,1,1) and (-1,-1,-1) project into the hexagon's interior.
                CHECK(seg.kind == shadow::NormalSegment::Kind::kEmpty);
                continue;
            }
            REQUIRE(seg.kind == shadow::NormalSegment::Kind::kSegment);
            // The endpoints are exactly the two hexagon facets through x.
            std::set<RatVec, RatVecLexLess> expect;
            for (std::size_t i = 0; i < hex.num_inequalities(); ++i)
                if (dot(hex.ineq_lhs.row(i), x) == hex.ineq_rhs[i])
                    expect.insert((Rat(1) / hex.ineq_rhs[i]) * hex.ineq_lhs.row(i));
            REQUIRE(expect.size() == 2);
            CHECK(expect.count(seg.alpha_lo) == 1);
            CHECK(expect.count(seg.alpha_hi) == 1);
        }
    }
}

TEST_CASE("enumerate_shadow_facets") {
    SECTION("hexagon from the cube") {
        auto G = diag3();
        shadow::ShadowStats stats;
        auto H = shadow::enumerate_shadow_facets(gen::cube_h(3), G, {}, &stats);
        CHECK(H.num_inequalities() == 6);
        CHECK(H == hexagon_oracle(G));
        CHECK(stats.facets == 6);
        CHECK(stats.max_lp_calls_between_facets > 0);
    }
    SECTION("identity projection returns the canonical input") {
        auto G = DirectionSet::identity(3);
        CHECK(shadow::enumerate_shadow_facets(gen::cube_h(3), G) ==
              canonical_h(gen::cube_h(3)));
    }
    SECTION("d = 1 shadows are segments") {
        auto G = DirectionSet::coordinate_axes({1, 2}, 3);
        auto H = shadow::enumerate_shadow_facets(gen::cube_h(3), G);
        CHECK(H == canonical_h(gen::cube_h(1)));
    }
    SECTION("degenerate directions are detected") {
        auto G = DirectionSet::coordinate_axes({2}, 3);
        CHECK_THROWS_AS(shadow::enumerate_shadow_facets(gen::cube_h(3), G),
                        DegeneracyDetectedError);
    }
    SECTION("agrees with the elimination pipeline on random instances") {
        int compared = 0;
        for (int trial = 0; trial < 6 && compared < 3; ++trial) {
            const std::size_t n = 4 + trial % 2, k = 1 + trial % 3;
            auto P = gen::random_h_polytope(17000 + trial, n, 10);
            auto G = gadgets::sample_directions(n, k, 18000 + trial, 7);
            if (G.d() < 2) continue;
            HPolytope via_fm = fm::project_fm(P, G);
            shadow::ShadowOptions opts;
            opts.audit = true;
            CHECK(shadow::enumerate_shadow_facets(P, G, opts) == via_fm);
            ++compared;
        }
        CHECK(compared >= 3);
    }
}

TEST_CASE("full-direction projections are refused") {
    auto G = DirectionSet::coordinate_axes({0, 1, 2}, 3);
    CHECK_THROWS_AS(shadow::enumerate_shadow_facets(gen::cube_h(3), G), PreconditionError);
    CHECK_THROWS_AS(hvproj::enumerate_hv(gen::cube_h(3), G), PreconditionError);
}
