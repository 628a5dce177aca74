#include <catch2/catch.hpp>

#include "scx/rational.hpp"

using scx::Rational;

TEST_CASE("rational canonical form", "[rational]") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");

    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), scx::ValueError);
}

TEST_CASE("rational arithmetic is exact", "[rational]") {
    Rational third(1, 3), sixth(1, 6);
    CHECK(third + sixth == Rational(1, 2));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Rational(1, 18));
    CHECK(third / sixth == Rational(2));
    CHECK_THROWS_AS(third / Rational(0), scx::ValueError);

    // field behaviour on a few awkward values
    Rational a(-7, 12), b(35, -6);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(-(-a) == a);
}

TEST_CASE("rational parsing", "[rational]") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-7/4") == Rational(-7, 4));
    CHECK(Rational::parse("4/8") == Rational(1, 2));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("1/0"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse(""), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("1.5"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("a"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("1/"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("+3"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("1/+2"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("-"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse(" 1"), scx::ValueError);
    CHECK_THROWS_AS(Rational::parse("1 "), scx::ValueError);
}

TEST_CASE("rational ordering", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("perfect squares and exact sqrt", "[rational]") {
    CHECK(Rational(9, 4).is_perfect_square());
    CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK(Rational(0).is_perfect_square());
    CHECK(Rational(0).sqrt() == Rational(0));
    CHECK_FALSE(Rational(2).is_perfect_square());
    CHECK_FALSE(Rational(-4).is_perfect_square());
    CHECK_FALSE(Rational(9, 8).is_perfect_square());
    CHECK_THROWS_AS(Rational(2).sqrt(), scx::ValueError);
}

TEST_CASE("no overflow at any size", "[rational]") {
    Rational big = Rational::parse("1");
    for (int i = 0; i < 40; ++i) big *= Rational(1000);
    CHECK((big * big) / big == big);
    CHECK((big + Rational(1)) - big == Rational(1));
}
