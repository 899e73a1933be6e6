#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "perv/rational.hpp"

using namespace perv;
using perv::testing::thrown_kind;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6) == Rational(-2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(2, 3).denominator() == 3);
    CHECK(Rational(-1, 2).numerator() == -1);
}

TEST_CASE("arithmetic is exact") {
    Rational third(1, 3);
    Rational sum;
    for (int i = 0; i < 3; ++i)
        sum += third;
    CHECK(sum == Rational(1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK((Rational(1, 3) / Rational(1, 6)) == Rational(2));
    CHECK(-Rational(5, 4) == Rational(-5, 4));
    // no drift after many operations
    Rational x(1, 7);
    for (int i = 0; i < 100; ++i)
        x = x * Rational(3, 5) + Rational(1, 7);
    Rational y = x;
    CHECK((y - x).is_zero());
}

TEST_CASE("parse and format") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("2/4") == Rational(1, 2)); // reduced on parse
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));
}

TEST_CASE("parse rejects anything but integer or p/q text") {
    for (const char* bad : {"0.5", "1e3", "", "-", "1/", "/2", "1/-2", "1/0", "a", "1 / 2",
                            "+1", "0x10", "1.0"})
        CHECK(thrown_kind([&] { Rational::parse(bad); }) == ErrorKind::BadRational);
}

TEST_CASE("division by zero") {
    CHECK(thrown_kind([] { Rational(1) /= Rational(0); }) == ErrorKind::BadRational);
    CHECK(thrown_kind([] { Rational(1, 0); }) == ErrorKind::BadRational);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(!(Rational(2, 4) < Rational(1, 2)));
}

TEST_CASE("arbitrary precision") {
    Rational big(1);
    for (long i = 1; i <= 25; ++i)
        big *= Rational(i);
    CHECK(big.str() == "15511210043330985984000000"); // 25!
    Rational inv = Rational(1) / big;
    CHECK((big * inv) == Rational(1));
}
