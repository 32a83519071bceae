#include "doctest.h"

#include "thetadet/dyadic.hpp"
#include "thetadet/errors.hpp"

using thetadet::BigInt;
using thetadet::Dyadic;

TEST_CASE("dyadic normalization") {
    CHECK(Dyadic::ratio(4, 2) == Dyadic(1));
    CHECK(Dyadic::ratio(6, 1) == Dyadic(3));
    CHECK(Dyadic::ratio(0, 7) == Dyadic(0));
    CHECK(Dyadic::ratio(3, 2).numerator() == 3);
    CHECK(Dyadic::ratio(3, 2).exponent() == 2);
    CHECK(Dyadic::ratio(-8, 3) == Dyadic(-1));
}

TEST_CASE("dyadic ring arithmetic") {
    Dyadic h = Dyadic::half();
    CHECK(h + h == Dyadic(1));
    CHECK(h - h == Dyadic(0));
    CHECK(h * Dyadic(2) == Dyadic(1));
    CHECK(h * h == Dyadic::ratio(1, 2));
    CHECK(Dyadic(3) * Dyadic(-4) == Dyadic(-12));
    CHECK(Dyadic(5) - Dyadic(7) == Dyadic(-2));
    CHECK(-Dyadic::ratio(3, 1) == Dyadic::ratio(-3, 1));
    CHECK(Dyadic::ratio(1, 3) + Dyadic::ratio(3, 3) == h);

    // mixed exponents
    Dyadic a = Dyadic::ratio(5, 2);   // 5/4
    Dyadic b = Dyadic::ratio(-1, 1);  // -1/2
    CHECK(a + b == Dyadic::ratio(3, 2));
    CHECK(a * b == Dyadic::ratio(-5, 3));
}

TEST_CASE("dyadic predicates and comparisons") {
    CHECK(Dyadic(0).is_zero());
    CHECK(Dyadic(0).sign() == 0);
    CHECK(Dyadic(-3).sign() == -1);
    CHECK(Dyadic::half().sign() == 1);
    CHECK(Dyadic(7).is_integer());
    CHECK(Dyadic(7).is_odd_integer());
    CHECK(!Dyadic(6).is_odd_integer());
    CHECK(!Dyadic::half().is_integer());
    CHECK(!Dyadic::half().is_odd_integer());
    CHECK(Dyadic::half() < Dyadic(1));
    CHECK(Dyadic(-2) < Dyadic::ratio(-1, 1));
    CHECK(Dyadic(3) >= Dyadic(3));
    CHECK(Dyadic(2).abs() == Dyadic(2));
    CHECK(Dyadic(-2).abs() == Dyadic(2));
    CHECK(Dyadic::ratio(-7, 2).abs() == Dyadic::ratio(7, 2));
}

TEST_CASE("dyadic as_integer") {
    CHECK(Dyadic(42).as_integer() == 42);
    CHECK_THROWS_AS(Dyadic::half().as_integer(), std::logic_error);
}

TEST_CASE("dyadic string round trip") {
    CHECK(Dyadic(3).str() == "3");
    CHECK(Dyadic(-5).str() == "-5");
    CHECK(Dyadic::half().str() == "1/2");
    CHECK(Dyadic::ratio(-7, 2).str() == "-7/4");
    for (const char* s : {"0", "3", "-5", "1/2", "-7/4", "9/8", "-1/2"}) {
        CHECK(Dyadic::parse(s).str() == s);
    }
    CHECK(Dyadic::parse("2/4") == Dyadic::half());
    CHECK(Dyadic::parse("-6/2") == Dyadic(-3));
}

TEST_CASE("dyadic parse rejects junk") {
    CHECK_THROWS_AS(Dyadic::parse("1/3"), thetadet::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/0"), thetadet::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/-2"), thetadet::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("zebra"), thetadet::ParseError);
    CHECK_THROWS_AS(Dyadic::parse(""), thetadet::ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1.5"), thetadet::ParseError);
}

TEST_CASE("dyadic big values stay exact") {
    Dyadic big = Dyadic(1);
    for (int i = 0; i < 40; ++i) big *= Dyadic(10);  // 10^40
    Dyadic shifted = big * Dyadic::ratio(1, 13);     // 10^40 / 8192
    CHECK(shifted * Dyadic(8192) == big);
    CHECK(big.as_integer() == BigInt("10000000000000000000000000000000000000000"));
}
