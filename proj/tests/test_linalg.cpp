#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyproj/linalg.hpp"

using namespace polyproj;

TEST_CASE("solve_linear on the stated systems") {
    SECTION("identity") {
        auto sol = solve_linear(RatMat::identity(2), RatVec{Rat(3), Rat(5)});
        REQUIRE(sol);
        CHECK(sol->point == RatVec{Rat(3), Rat(5)});
        CHECK(sol->kernel.row_count() == 0);
    }
    SECTION("one equation, two unknowns") {
        RatMat m{RatVec{Rat(1), Rat(1)}};
        auto sol = solve_linear(m, RatVec{Rat(1)});
        REQUIRE(sol);
        CHECK(sol->point == RatVec{Rat(1), Rat(0)});
        REQUIRE(sol->kernel.row_count() == 1);
        CHECK(sol->kernel.row(0) == RatVec{Rat(1), Rat(-1)});
    }
    SECTION("inconsistent") {
        RatMat m{RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(0)}};
        CHECK_FALSE(solve_linear(m, RatVec{Rat(1), Rat(2)}));
    }
}

TEST_CASE("solve_linear solutions check out exactly", "[property]") {
    std::mt19937_64 eng(777);
    auto draw = [&](long bound) { return Rat(static_cast<long>(eng() % (2 * bound + 1)) - bound); };
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + eng() % 4, cols = 1 + eng() % 4;
        RatMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw(5);
        RatVec rhs(rows);
        for (std::size_t i = 0; i < rows; ++i) rhs[i] = draw(5);
        auto sol = solve_linear(m, rhs);
        if (!sol) continue;
        CHECK(m.apply(sol->point) == rhs);
        RatVec combo = sol->point;
        for (std::size_t r = 0; r < sol->kernel.row_count(); ++r)
            combo += draw(3) * sol->kernel.row(r);
        CHECK(m.apply(combo) == rhs);
        CHECK(sol->kernel.row_count() == cols - rank(m));
    }
}

TEST_CASE("orthogonal complement basis") {
    SECTION("coordinate direction in R^3") {
        RatMat g{RatVec{Rat(0), Rat(0), Rat(1)}};
        auto c = orth_complement_basis(g, 3);
        REQUIRE(c.row_count() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(dot(c.row(i), g.row(0)) == 0);
            CHECK(c.row(i)[2] == 0);
        }
        CHECK(dot(c.row(0), c.row(1)) == 0);
    }
    SECTION("diagonal direction in R^3") {
        RatMat g{RatVec{Rat(1), Rat(1), Rat(1)}};
        auto c = orth_complement_basis(g, 3);
        REQUIRE(c.row_count() == 2);
        CHECK(dot(c.row(0), g.row(0)) == 0);
        CHECK(dot(c.row(1), g.row(0)) == 0);
        CHECK(dot(c.row(0), c.row(1)) == 0);
        RatMat stacked = c;
        stacked.append_row(g.row(0));
        CHECK(rank(stacked) == 3);
    }
    SECTION("dependence reported before non-orthogonality") {
        RatMat g{RatVec{Rat(1), Rat(0), Rat(0)}, RatVec{Rat(2), Rat(0), Rat(0)}};
        CHECK_THROWS_AS(orth_complement_basis(g, 3), DependentDirectionsError);
    }
    SECTION("independent but skew") {
        RatMat g{RatVec{Rat(1), Rat(0)}, RatVec{Rat(1), Rat(1)}};
        CHECK_THROWS_AS(orth_complement_basis(g, 2), NotOrthogonalError);
    }
    SECTION("empty set gives the standard basis") {
        auto c = orth_complement_basis(RatMat(), 3);
        CHECK(c == RatMat::identity(3));
    }
}

TEST_CASE("complement basis inner products vanish exactly", "[property]") {
    std::mt19937_64 eng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + eng() % 5;
        const std::size_t k = 1 + eng() % n;
        // Build an orthogonal set by Gram-Schmidt on random vectors.
        RatMat dirs;
        for (std::size_t i = 0; i < k; ++i) {
            RatVec v(n);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = Rat(static_cast<long>(eng() % 11) - 5);
            for (std::size_t b = 0; b < dirs.row_count(); ++b) {
                const Rat c = dot(dirs.row(b), v);
                if (c != 0) v -= (c / dot(dirs.row(b), dirs.row(b))) * dirs.row(b);
            }
            if (v.is_zero()) continue;
            dirs.append_row(primitive(v));
        }
        if (dirs.row_count() == 0 || dirs.row_count() == n) continue;
        auto comp = orth_complement_basis(dirs, n);
        REQUIRE(comp.row_count() == n - dirs.row_count());
        for (std::size_t i = 0; i < comp.row_count(); ++i) {
            for (std::size_t j = 0; j < dirs.row_count(); ++j)
                CHECK(dot(comp.row(i), dirs.row(j)) == 0);
            for (std::size_t j = i + 1; j < comp.row_count(); ++j)
                CHECK(dot(comp.row(i), comp.row(j)) == 0);
        }
        RatMat stacked = comp;
        for (std::size_t j = 0; j < dirs.row_count(); ++j) stacked.append_row(dirs.row(j));
        CHECK(rank(stacked) == n);
    }
}
