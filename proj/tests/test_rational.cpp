#include "doctest.h"
#include "supersym/rational.hpp"

#include <random>

using supersym::Rational;

TEST_CASE("rational add") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(1, 24) + Rational(-1, 24)).is_zero());
    CHECK((Rational(1, 24) + Rational(-1, 24)).str() == "0");
    CHECK(Rational(1, 6) + Rational(1, 6) == Rational(1, 3));
    CHECK((Rational(1, 6) + Rational(1, 6)).denominator() == 3);
}

TEST_CASE("rational mul") {
    CHECK(Rational(1, 2) * Rational(1, 12) == Rational(1, 24));
    CHECK((Rational(-1, 2) * Rational(0)).is_zero());
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
}

TEST_CASE("rational inverse") {
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-5).inverse() == Rational(-1, 5));
    CHECK(Rational(-5).inverse().denominator() == 5);
    CHECK_THROWS_AS(Rational(0).inverse(), supersym::DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), supersym::DivisionByZero);
}

TEST_CASE("rational canonical form and text") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a/2"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int it = 0; it < 300; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        for (const Rational& r : {a + b, a * b, a - c})
            CHECK(r.denominator() > 0);
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(supersym::factorial(0) == Rational(1));
    CHECK(supersym::factorial(6) == Rational(720));
    CHECK(supersym::binomial(5, 2) == Rational(10));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}
