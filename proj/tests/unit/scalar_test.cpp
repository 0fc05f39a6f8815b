#include <catch2/catch_amalgamated.hpp>

#include <metriclie/polynomial.hpp>
#include <metriclie/scalar_parser.hpp>

#include "../support/test_support.hpp"

using namespace metriclie;

TEST_CASE("rationals are canonical and ordered") {
    CHECK(Rational(BigInt(-5), BigInt(10)).str() == "-1/2");
    CHECK(Rational(BigInt(4), BigInt(-6)).str() == "-2/3");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-7, 2) < Rational(0));
    CHECK(Rational::parse("-5/4") == Rational(-5, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("3.5"), ParseError);
    CHECK_THROWS_AS(Rational(1).reciprocal() / Rational(0), DivisionByZero);
    // Values beyond 64 bits stay exact.
    Rational big(1, 1);
    for (int i = 0; i < 5; ++i) big *= Rational(BigInt("12345678901234567"), BigInt(1));
    CHECK(big * big.reciprocal() == Rational(1));
}

TEST_CASE("parse_scalar handles the grammar and its error cases") {
    CHECK(parse_scalar("-5/4").as_rational() == Rational(-5, 4));
    CHECK(parse_scalar("2^10").as_rational() == Rational(1024));
    CHECK(parse_scalar("-2^2").as_rational() == Rational(-4));
    CHECK(parse_scalar(" ( 1 + 2 ) * 3 ").as_rational() == Rational(9));
    CHECK(parse_scalar("1 - 2 - 3").as_rational() == Rational(-4));
    CHECK(parse_scalar("12/3/2").as_rational() == Rational(2));

    const auto s = parse_scalar("-8/h + 1/2", std::string("h"));
    // Canonical form of (h - 16)/(2h); cross-checked by evaluation.
    CHECK(s == parse_scalar("(h - 16)/(2*h)", std::string("h")));
    CHECK(s.evaluate(Rational(2)) == Rational(-7, 2));
    CHECK(s.evaluate(Rational(-4)) == Rational(5, 2));
    CHECK_THROWS_AS(s.evaluate(Rational(0)), EvaluationError);

    SECTION("syntax errors report byte offsets") {
        try {
            parse_scalar("(x", std::string("x"));
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 2);
        }
        CHECK_THROWS_AS(parse_scalar("1 +", std::string("h")), ParseError);
        CHECK_THROWS_AS(parse_scalar("h^-1", std::string("h")), ParseError);
        CHECK_THROWS_AS(parse_scalar("3 4"), ParseError);
    }
    SECTION("unknown parameters are rejected") {
        CHECK_THROWS_AS(parse_scalar("h + 1"), UnknownParameterError);
        CHECK_THROWS_AS(parse_scalar("t + 1", std::string("h")), UnknownParameterError);
    }
    SECTION("division by the zero polynomial") {
        CHECK_THROWS_AS(parse_scalar("1/(h - h)", std::string("h")), DivisionByZero);
    }
}

TEST_CASE("parameterized scalars form a field with unique canonical forms") {
    const ParamScalar h = ParamScalar::parameter("h");
    const ParamScalar a = (h * h - 16) / (h + 4); // = h - 4 after reduction
    CHECK(a == h - ParamScalar(Rational(4)));
    CHECK(a.denominator().is_one());

    // Constants shed their parameter and compare equal to plain rationals.
    CHECK((h / h) == ParamScalar(Rational(1)));
    CHECK((h - h) == ParamScalar(Rational(0)));
    CHECK(parse_scalar("1 + 0*h", std::string("h")).is_constant());

    CHECK_THROWS_AS(ParamScalar::parameter("a") + ParamScalar::parameter("b"), MixedParameters);

    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> nc(3), dc(3);
        for (auto& c : nc) c = testsupport::random_rational(rng, 6, 4);
        for (auto& c : dc) c = testsupport::random_rational(rng, 6, 4);
        const Polynomial num = Polynomial::from_coefficients(nc);
        const Polynomial den = Polynomial::from_coefficients(dc);
        if (num.is_zero() || den.is_zero()) continue;
        const ParamScalar x(num, den, std::string("h"));
        CHECK(x * x.reciprocal() == ParamScalar(Rational(1)));
        // Same value from a scaled representation has an identical form.
        const ParamScalar y(num * Rational(-6), den * Rational(-6), std::string("h"));
        CHECK(x.str() == y.str());
        CHECK(parse_scalar(x.str(), std::string("h")) == x);
    }
}

TEST_CASE("exact evaluation agrees with direct float evaluation") {
    const std::vector<std::string> exprs = {
        "-8/h + 1/2",
        "(h^3 - 2*h + 1)/(3*h^2 + 1)",
        "h^4/(h - 3) - (2 - h)/(h + 5)",
        "((h + 1)*(h - 1) + 1)/h",
        "1/2*h^2 - 7/3*h + 4/9",
    };
    std::mt19937 rng(7);
    for (const auto& text : exprs) {
        const ParamScalar exact = parse_scalar(text, std::string("h"));
        for (int k = 0; k < 20; ++k) {
            const Rational t = testsupport::random_rational(rng, 12, 7);
            Rational v;
            try {
                v = exact.evaluate(t);
            } catch (const EvaluationError&) {
                continue; // denominator vanishes at this sample
            }
            const double direct = testsupport::FloatExprEvaluator(text, "h", t.to_double()).run();
            if (!std::isfinite(direct)) continue; // a subexpression denominator hit zero
            const double scale = std::max(1.0, std::abs(direct));
            CHECK(std::abs(v.to_double() - direct) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("rational root finding") {
    const Polynomial h = Polynomial::variable();
    CHECK(rational_roots(h) == std::vector<Rational>{Rational(0)});
    CHECK(rational_roots(h * h - Polynomial(1)) ==
          std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(rational_roots(h + Polynomial(4)) == std::vector<Rational>{Rational(-4)});
    // Multiplicities and fractional roots.
    const Polynomial p = (h + Polynomial(4)) * (h + Polynomial(4)) *
                         (h * Rational(2) - Polynomial(1));
    CHECK(rational_roots(p) ==
          std::vector<Rational>{Rational(-4), Rational(-4), Rational(1, 2)});
    // No rational roots.
    CHECK(rational_roots(h * h - Polynomial(2)).empty());
    CHECK_THROWS_AS(rational_roots(Polynomial()), Error);
}

TEST_CASE("polynomial division and gcd") {
    const Polynomial h = Polynomial::variable();
    const Polynomial g = h * h + Polynomial(1);
    const Polynomial a = g * (h - Polynomial(3));
    const Polynomial b = g * (h + Polynomial(7)) * Rational(5);
    CHECK(Polynomial::gcd(a, b) == g); // gcd comes back monic
    auto [q, r] = divmod(a, h - Polynomial(3));
    CHECK(q == g);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divmod(a, Polynomial()), DivisionByZero);
    CHECK(a.evaluate(Rational(3)) == Rational(0));
    CHECK(Polynomial::from_coefficients({Rational(1), Rational(2)}).str("h") == "2*h + 1");
}
