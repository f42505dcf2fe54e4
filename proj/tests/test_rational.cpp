#include "doctest.h"

#include "helpers.hpp"

using namespace qracah;
using qracah::testing::r;
using qracah::testing::RationalSampler;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
}

TEST_CASE("rational parse and str round-trip") {
    CHECK(Rational::parse("2/4") == r(1, 2));
    CHECK(Rational::parse("-6/4") == r(-3, 2));
    CHECK(Rational::parse("7") == r(7));
    CHECK(Rational::parse("-0") == r(0));
    CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");
    CHECK(r(1, 2).str() == "1/2");
    CHECK(r(-5).str() == "-5");
    CHECK(Rational::parse(r(-22, 7).str()) == r(-22, 7));

    CHECK_THROWS_AS(Rational::parse(""), ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParameterError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParameterError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(r(1, 3) + r(1, 6) == r(1, 2));
    CHECK(r(1, 3) - r(1, 2) == r(-1, 6));
    CHECK(r(2, 3) * r(9, 4) == r(3, 2));
    CHECK(r(2, 3) / r(4, 9) == r(3, 2));
    CHECK(-r(5, 7) == r(-5, 7));
    CHECK(r(5, 7).inverse() == r(7, 5));
    CHECK_THROWS_AS(r(0).inverse(), ParameterError);
    CHECK_THROWS_AS(r(1) / r(0), ParameterError);
}

TEST_CASE("rational pow with negative exponents") {
    CHECK(r(2).pow(10) == r(1024));
    CHECK(r(2).pow(-3) == r(1, 8));
    CHECK(r(-2, 3).pow(3) == r(-8, 27));
    CHECK(r(-2, 3).pow(-2) == r(9, 4));
    CHECK(r(7).pow(0) == r(1));
    CHECK(r(0).pow(0) == r(1));
    CHECK_THROWS_AS(r(0).pow(-1), ParameterError);
}

TEST_CASE("rational field axioms on sampled triples") {
    RationalSampler s(42);
    for (int k = 0; k < 200; ++k) {
        const Rational a = s.any(), b = s.any(), c = s.any();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == r(1));
    }
}

TEST_CASE("q-integers at q = 2 match frozen values") {
    CHECK(qint(0, r(2)) == r(0));
    CHECK(qint(1, r(2)) == r(1));
    CHECK(qint(2, r(2)) == r(5, 2));
    CHECK(qint(3, r(2)) == r(21, 4));
}

TEST_CASE("q-integer symmetry and defining identity") {
    const std::vector<Rational> qs = {r(2), r(3, 2), r(-5, 7), r(11)};
    for (const auto& q : qs) {
        for (long n = -6; n <= 6; ++n) {
            CHECK(qint(-n, q) == -qint(n, q));
            CHECK(qint(n, q) * (q - q.inverse()) == q.pow(n) - q.pow(-n));
        }
    }
    CHECK_THROWS_AS(qint(2, r(0)), ParameterError);
    CHECK_THROWS_AS(qint(2, r(1)), ParameterError);
    CHECK_THROWS_AS(qint(2, r(-1)), ParameterError);
}

TEST_CASE("param validation lists every violation") {
    ParamSet good = qracah::testing::base_params({{1, r(5), r(1)}});
    CHECK(param_violations(good).empty());
    CHECK(&validate_params(good) == &good);  // idempotent, returns the input

    ParamSet bad;
    bad.q = r(1);
    bad.a = r(0);
    bad.b = r(7);
    bad.factors = {{0, r(0), r(0)}};
    const auto v = param_violations(bad);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == "q is a root of unity");
    CHECK(v[1] == "a is zero");
    CHECK(v[2] == "factor 0: diameter must be >= 1");
    CHECK(v[3] == "factor 0: evaluation parameter zero");
    CHECK(v[4] == "factor 0: normalization xi zero");

    try {
        validate_params(bad);
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(e.violations() == v);
    }

    ParamSet qzero = good;
    qzero.q = r(0);
    CHECK(param_violations(qzero) == std::vector<std::string>{"q is zero"});
    ParamSet qminus = good;
    qminus.q = r(-1);
    CHECK(param_violations(qminus) ==
          std::vector<std::string>{"q is a root of unity"});
    ParamSet nofactors = good;
    nofactors.factors.clear();
    CHECK(param_violations(nofactors) ==
          std::vector<std::string>{"no tensor factors given"});
}

TEST_CASE("param set dimension bookkeeping") {
    ParamSet p = qracah::testing::base_params(
        {{2, r(5), r(1)}, {1, r(11), r(1)}, {3, r(13), r(1)}});
    CHECK(p.total_diameter() == 6);
    CHECK(p.dimension() == 3 * 2 * 4);
}

TEST_CASE("fnv1a64 matches the reference vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 12638187200555641996ULL);
    CHECK(fnv1a64("foobar") == 9625390261332436968ULL);
}
