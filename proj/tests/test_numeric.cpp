#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abelwalls/numeric.hpp"

#include <random>

using namespace abelwalls;

TEST_CASE("floor and ceil division round toward the right infinities") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-2, 2) == -1);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK_THROWS_AS(floor_div(1, 0), precondition_error);
}

TEST_CASE("integer square roots bracket exactly") {
    for (long x = 0; x <= 5000; ++x) {
        Int s = isqrt_floor(Int(x));
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
        Int m = ceil_sqrt(Int(x));
        CHECK(m * m >= x);
        if (x > 0) CHECK((m - 1) * (m - 1) < x);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int x = Int(static_cast<unsigned long>(rng())) * Int(static_cast<unsigned long>(rng()));
        Int s = isqrt_floor(x);
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
    }
    CHECK_THROWS_AS(isqrt_floor(Int(-1)), precondition_error);
}

TEST_CASE("rationals canonicalize with positive denominators") {
    Rat x = make_rat(2, -4);
    CHECK(x.get_num() == -1);
    CHECK(x.get_den() == 2);
    CHECK(rat_str(x) == "-1/2");
    CHECK(rat_str(Rat(3)) == "3/1");
    CHECK_THROWS_AS(make_rat(1, 0), precondition_error);
}

TEST_CASE("integer and rational parsing") {
    CHECK(parse_int("-42") == -42);
    CHECK(parse_int("+7") == 7);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int("12x"), parse_error);
    CHECK_THROWS_AS(parse_int(""), parse_error);
    CHECK_THROWS_AS(parse_int("-"), parse_error);
    CHECK(parse_rat("3/1") == Rat(3));
    CHECK(parse_rat("-6/4") == make_rat(-3, 2));
    CHECK(parse_rat("5") == Rat(5));
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rat x = make_rat(Int(static_cast<long>(rng() % 2001) - 1000),
                         Int(static_cast<long>(rng() % 999) + 1));
        CHECK(parse_rat(rat_str(x)) == x);
    }
}

TEST_CASE("decimal rendering at fixed significant digits") {
    CHECK(decimal(Rat(0), 5) == "0");
    CHECK(decimal(Rat(3), 12) == "3.00000000000");
    CHECK(decimal(make_rat(1, 8), 3) == "0.125");
    CHECK(decimal(make_rat(2, 3), 4) == "0.6667");
    CHECK(decimal(make_rat(-1, 2), 2) == "-0.50");
    CHECK(decimal(make_rat(999, 1000), 2) == "1.0");
    CHECK(decimal(Rat(12345), 2) == "12000");
    CHECK(decimal(make_rat(1, 400), 3) == "0.00250");
}

TEST_CASE("square-root decimals derive from exact integer arithmetic") {
    CHECK(sqrt_decimal(Rat(3), 12) == "1.73205080757");
    CHECK(sqrt_decimal(Rat(4), 12) == "2.00000000000");
    CHECK(sqrt_decimal(make_rat(1, 4), 3) == "0.500");
    CHECK(sqrt_decimal(Rat(2), 6) == "1.41421");

    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        Rat x = make_rat(Int(static_cast<long>(rng() % 5000) + 1),
                         Int(static_cast<long>(rng() % 500) + 1));
        Rat a = sqrt_approx(x, 12);
        CHECK(a * a <= x);
        Rat step = make_rat(1, pow10(12));
        CHECK((a + step) * (a + step) > x);
    }
}
