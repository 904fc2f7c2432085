#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyproj/rat.hpp"

using namespace polyproj;

TEST_CASE("rational parsing accepts p/q, integers and exact decimals") {
    CHECK(parse_rat("3/6") == rat_from_parts(1, 2));
    CHECK(parse_rat("-2/4") == rat_from_parts(-1, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("+7") == Rat(7));
    CHECK(parse_rat("0.25") == rat_from_parts(1, 4));
    CHECK(parse_rat("-3.25") == rat_from_parts(-13, 4));
    CHECK(parse_rat("-0.5") == rat_from_parts(-1, 2));
    CHECK(parse_rat("2.") == Rat(2));
    CHECK(parse_rat(".5") == rat_from_parts(1, 2));
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.2.3"), ParseError);
}

TEST_CASE("rational formatting is p/q or p") {
    CHECK(rat_to_string(rat_from_parts(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_string(parse_rat("-0.125")) == "-1/8");
}

TEST_CASE("rational arithmetic stays reduced and exact") {
    std::mt19937_64 eng(12345);
    auto draw = [&]() {
        const long num = static_cast<long>(eng() % 2001) - 1000;
        const long den = 1 + static_cast<long>(eng() % 50);
        return rat_from_parts(num, den);
    };
    for (int i = 0; i < 500; ++i) {
        const Rat a = draw(), b = draw();
        CHECK((a + b) - b == a);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);
        for (const Rat& v : {Rat(a + b), Rat(a - b), Rat(a * b)}) {
            CHECK(denominator(v) > 0);
            CHECK(gcd(abs(numerator(v)), denominator(v)) == 1);
        }
    }
}

TEST_CASE("vector arithmetic enforces dimensions") {
    RatVec a{Rat(1), Rat(2)}, b{Rat(3), Rat(4)}, c{Rat(1), Rat(1), Rat(1)};
    CHECK(a + b == RatVec{Rat(4), Rat(6)});
    CHECK(dot(a, b) == 11);
    CHECK_THROWS_AS(a + c, DimensionMismatchError);
    CHECK_THROWS_AS(dot(a, c), DimensionMismatchError);
    CHECK(lex_less(a, b));
    CHECK_FALSE(lex_less(b, a));
}

TEST_CASE("primitive integer scaling") {
    CHECK(primitive(RatVec{rat_from_parts(1, 2), rat_from_parts(1, 3)}) ==
          RatVec{Rat(3), Rat(2)});
    CHECK(primitive(RatVec{Rat(-2), Rat(-4)}) == RatVec{Rat(-1), Rat(-2)});
    CHECK_THROWS_AS(primitive(RatVec{Rat(0), Rat(0)}), ZeroVectorError);
    CHECK(primitive_signed(RatVec{Rat(0), Rat(-3), Rat(6)}) == RatVec{Rat(0), Rat(1), Rat(-2)});
}

TEST_CASE("matrix shape checks and products") {
    RatMat m{RatVec{Rat(1), Rat(2)}, RatVec{Rat(3), Rat(4)}};
    CHECK(m.apply(RatVec{Rat(1), Rat(1)}) == RatVec{Rat(3), Rat(7)});
    CHECK(m.transposed()(0, 1) == 3);
    CHECK_THROWS_AS(m.append_row(RatVec{Rat(1)}), DimensionMismatchError);
    RatMat id = RatMat::identity(2);
    CHECK(m.multiplied(id) == m);
}
