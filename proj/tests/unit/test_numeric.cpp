#include "doctest.h"
#include "toric/numeric.hpp"

#include <random>

using toric::Integer;
using toric::Rational;
using toric::Scalar;

namespace {

Scalar quad(long a, long b, long d = 5) { return Scalar(Rational(a), Rational(b), d); }

Scalar random_quad(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5);
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("129/28") == Rational(129, 28));
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse("1.1") == Rational(11, 10));
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), toric::ScalarParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), toric::ScalarParseError);
    CHECK_THROWS_AS(Rational::parse(""), toric::ScalarParseError);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational floor and ceil")
{
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("quadratic sign")
{
    CHECK(toric::sign_of(quad(0, 0)) == 0);
    CHECK(toric::sign_of(quad(-5, 2)) == -1);  // 2 sqrt5 < 5
    CHECK(toric::sign_of(quad(1, 1)) == 1);
    CHECK(toric::sign_of(quad(-4, 2)) == 1);   // 2 sqrt5 > 4
    CHECK(toric::sign_of(quad(5, -2)) == 1);
    CHECK(toric::sign_of(quad(4, -2)) == -1);
}

TEST_CASE("compare exact values")
{
    CHECK(toric::compare(Scalar::fraction(129, 28), Scalar::fraction(132, 28)) == std::strong_ordering::less);
    const Scalar phi(Rational(1, 2), Rational(1, 2), 5);
    CHECK(toric::compare(phi, phi) == std::strong_ordering::equal);
    CHECK(Scalar(6) * phi < Scalar(2) * phi + Scalar(7));
    CHECK_THROWS_AS(quad(1, 1, 5) + quad(1, 1, 2), toric::RadicandMismatch);
    CHECK_THROWS(quad(1, 1, 4));  // not square-free
}

TEST_CASE("golden ratio identities")
{
    const Scalar phi(Rational(1, 2), Rational(1, 2), 5);
    CHECK(phi * phi == phi + Scalar(1));
    CHECK(Scalar(1) / phi == phi - Scalar(1));
    CHECK(phi.floor() == 1);
    CHECK(phi.ceil() == 2);
    CHECK((Scalar(11) * phi).floor() == 17);
    CHECK((Scalar(-3) * phi).floor() == -5);
    CHECK(toric::format_decimal(phi) == "1.618034");
}

TEST_CASE("scalar strings round-trip")
{
    for (const char* text : {"3", "-7/2", "1/2+1/2*sqrt(5)", "2-3*sqrt(5)", "5/3*sqrt(2)"}) {
        Scalar x = Scalar::parse(text);
        CHECK(Scalar::parse(x.to_string()) == x);
    }
    CHECK(Scalar::parse("1/2+1/2*sqrt(5)").to_string() == "1/2+1/2*sqrt(5)");
    CHECK(Scalar::parse("sqrt(5)") == quad(0, 1));
    CHECK_THROWS_AS(Scalar::parse("1+*sqrt(5)"), toric::ScalarParseError);
}

TEST_CASE("decimal formatting rounds exactly")
{
    CHECK(toric::format_decimal(Scalar::fraction(129, 28)) == "4.607143");
    CHECK(toric::format_decimal(Scalar::fraction(41, 10)) == "4.1");
    CHECK(toric::format_decimal(Scalar(6)) == "6");
    CHECK(toric::format_decimal(Scalar::fraction(-1, 3)) == "-0.333333");
}

TEST_CASE("field axioms on random quadratic scalars")
{
    std::mt19937_64 rng(7);
    for (int n = 0; n < 500; ++n) {
        Scalar x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        int s = toric::sign_of(x) * toric::sign_of(-x);
        CHECK((s == 0 || s == -1));
        CHECK(toric::sign_of(x * x) >= 0);
        Integer f = x.floor();
        CHECK(!(x < Scalar(Rational(f))));
        CHECK(x < Scalar(Rational(Integer(f + 1))));
    }
}

TEST_CASE("rational order agrees with cross multiplication")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int n = 0; n < 10000; ++n) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const bool less = a * d < c * b;
        CHECK((Rational(a, b) < Rational(c, d)) == less);
    }
}
