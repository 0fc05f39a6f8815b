#include <catch2/catch_amalgamated.hpp>

#include <metriclie/catalog.hpp>
#include <metriclie/soliton.hpp>

#include "../support/test_support.hpp"

using namespace metriclie;
using catalog::H3Metric;

namespace {

RationalMatrix diag(const std::vector<Rational>& d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

} // namespace

TEST_CASE("soliton solutions of the worked examples") {
    SECTION("h3 g1: shrinking nilsoliton") {
        const auto s = solve_algebraic_soliton(catalog::h3_metric(H3Metric::g1));
        REQUIRE(s);
        CHECK(s->c == Rational(3, 2));
        CHECK(s->d == diag({-2, -1, -1}));
        CHECK(s->cls == SolitonClass::shrinking);
        CHECK(s->unique);
    }
    SECTION("h3 g2: shrinking nilsoliton in the center-timelike frame") {
        const auto s = solve_algebraic_soliton(catalog::h3_metric(H3Metric::g2));
        REQUIRE(s);
        CHECK(s->c == Rational(3, 2));
        CHECK(s->d == diag({-1, -1, -2}));
    }
    SECTION("oscillator at eps = 0: steady with trace-free derivation") {
        const auto m = catalog::oscillator(1, {Rational(1)}, Rational(0));
        const auto s = solve_algebraic_soliton(m);
        REQUIRE(s);
        CHECK(s->c == Rational(0));
        RationalMatrix expected(4, 4);
        expected(0, 3) = Rational(1, 2); // D Q = (m/2) P
        CHECK(s->d == expected);
        CHECK(s->cls == SolitonClass::steady);
        CHECK(trace(s->d) == Rational(0));
    }
    SECTION("oscillator at eps != 0 has no algebraic soliton") {
        const auto family = catalog::oscillator(1, {Rational(1)}, Rational(1));
        CHECK_FALSE(solve_algebraic_soliton_at(family, Rational(1)).has_value());
        CHECK_FALSE(solve_algebraic_soliton_at(family, Rational(-1)).has_value());
        const auto half = catalog::oscillator(1, {Rational(1)}, Rational(1, 2));
        REQUIRE(half.is_parameter_free());
        CHECK_FALSE(solve_algebraic_soliton(half).has_value());
    }
    SECTION("E(2): c = 2 with D = diag(0, -2, -2)") {
        const auto s = solve_algebraic_soliton(catalog::euclidean_motion());
        REQUIRE(s);
        CHECK(s->c == Rational(2));
        CHECK(s->d == diag({0, -2, -2}));
    }
    SECTION("Heisenberg family: c = n/2 + 1 (published closed form at n = 1)") {
        for (long n = 1; n <= 5; ++n) {
            const auto s = solve_algebraic_soliton(catalog::heisenberg(n));
            REQUIRE(s);
            CHECK(s->c == Rational(n + 2, 2));
            const std::size_t N = static_cast<std::size_t>(2 * n + 1);
            for (std::size_t i = 0; i + 1 < N; ++i) CHECK(s->d(i, i) == Rational(-(n + 1), 2));
            CHECK(s->d(N - 1, N - 1) == Rational(-(n + 1)));
            CHECK(s->cls == SolitonClass::shrinking);
        }
    }
}

TEST_CASE("lie_derivative_form") {
    const auto g1 = catalog::h3_metric(H3Metric::g1);
    CHECK(lie_derivative_form(g1, diag({-2, -1, -1})) == diag({-2, -1, 1}));
    CHECK(lie_derivative_form(g1, RationalMatrix(3, 3)).is_zero());

    const auto osc = catalog::oscillator(1, {Rational(1)}, Rational(0));
    RationalMatrix d(4, 4);
    d(0, 3) = Rational(1, 2);
    const auto form = lie_derivative_form(osc, d);
    RationalMatrix expected(4, 4);
    expected(3, 3) = Rational(1, 2); // single entry L(Q, Q) = 1/2
    CHECK(form == expected);
    CHECK_THROWS_AS(lie_derivative_form(g1, RationalMatrix(2, 2)), DimensionMismatch);
}

TEST_CASE("the soliton-to-Ricci-soliton identity") {
    const auto g1 = catalog::h3_metric(H3Metric::g1);
    const auto s = solve_algebraic_soliton(g1);
    REQUIRE(s);
    CHECK(verify_ricci_soliton_identity(g1, *s));

    const auto e11 = catalog::minkowski_motion();
    const auto s11 = solve_algebraic_soliton(e11);
    REQUIRE(s11);
    CHECK(s11->c == Rational(2));
    CHECK(s11->d == diag({0, -2, -2}));
    CHECK(verify_ricci_soliton_identity(e11, *s11));

    SolitonSolution perturbed = *s;
    perturbed.c += Rational(1, 7);
    CHECK_FALSE(verify_ricci_soliton_identity(g1, perturbed));
}

TEST_CASE("classification rules") {
    CHECK(classify_soliton(Rational(3, 2), diag({-2, -1, -1})) == SolitonClass::shrinking);
    RationalMatrix dq(4, 4);
    dq(0, 3) = Rational(1, 2);
    CHECK(classify_soliton(Rational(0), dq) == SolitonClass::steady);
    CHECK(classify_soliton(Rational(0), RationalMatrix(3, 3)) == SolitonClass::ricci_flat);
    CHECK(classify_soliton(Rational(-5), RationalMatrix(3, 3)) == SolitonClass::einstein);
    CHECK(classify_soliton(Rational(-5), diag({1, 0, 0})) == SolitonClass::expanding);
}

TEST_CASE("solver consistency: rc - c Id is a derivation") {
    for (const auto& [id, metric] : testsupport::exact_catalog_metrics()) {
        if (!metric.is_parameter_free()) continue;
        CAPTURE(id);
        const auto s = solve_algebraic_soliton(metric);
        if (!s) continue;
        CHECK(is_derivation(metric.algebra(), s->d));
        const auto rc = to_rational_matrix(ricci_operator(metric));
        CHECK(rc == s->c * RationalMatrix::identity(metric.dim()) + s->d);
    }
}

TEST_CASE("uniqueness: full column rank exactly on non-abelian algebras") {
    for (const auto& [id, metric] : testsupport::exact_catalog_metrics()) {
        CAPTURE(id);
        CHECK(testsupport::check_soliton_rank(metric, id).empty());
    }
    SECTION("abelian algebras return the canonical (0, 0) with unique = false") {
        RationalMatrix g(2, 2);
        g(0, 0) = 5;
        g(1, 1) = -1;
        const auto m = MetricLieAlgebra::make(LieAlgebra::make(2, {}), g);
        const auto s = solve_algebraic_soliton(m);
        REQUIRE(s);
        CHECK(s->c == Rational(0));
        CHECK(s->d.is_zero());
        CHECK_FALSE(s->unique);
        CHECK(s->cls == SolitonClass::ricci_flat);
    }
}

TEST_CASE("scaling and automorphism equivariance of the solver") {
    CHECK(testsupport::check_scaling(catalog::h3_metric(H3Metric::g1), "h3:g1").empty());
    CHECK(testsupport::check_scaling(catalog::minkowski_motion(), "e11").empty());

    std::mt19937 rng(555);
    const auto g1 = catalog::h3_metric(H3Metric::g1);
    const auto autos = testsupport::random_automorphisms(g1.algebra(), rng, 4);
    REQUIRE_FALSE(autos.empty());
    CHECK(testsupport::check_automorphism_equivariance(g1, autos, "h3:g1").empty());
}

TEST_CASE("parameterized metrics are rejected by the plain solver") {
    CHECK_THROWS_AS(solve_algebraic_soliton(catalog::oscillator(1, {Rational(1)}, Rational(1))),
                    ParameterizedValue);
}
