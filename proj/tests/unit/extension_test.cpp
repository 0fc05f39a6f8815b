#include <catch2/catch_amalgamated.hpp>

#include <metriclie/catalog.hpp>
#include <metriclie/extension.hpp>

#include "../support/test_support.hpp"

using namespace metriclie;
using catalog::H3Metric;

namespace {

ExtensionSpec h3_g1_extension() {
    const auto base = catalog::h3_metric(H3Metric::g1);
    const auto s = solve_algebraic_soliton(base);
    REQUIRE(s);
    return build_solvable_extension(base, s->d, "h");
}

} // namespace

TEST_CASE("building solvable extensions") {
    const auto ext = h3_g1_extension();
    const auto& a = ext.result.algebra();
    REQUIRE(ext.result.dim() == 4);
    CHECK(a.basis_name(0) == "H");

    // [H, F1] = -2 F1, [H, F2] = -F2, [H, F3] = -F3, [F2, F3] = F1.
    CHECK(a.c(0, 1, 1) == Rational(-2));
    CHECK(a.c(0, 2, 2) == Rational(-1));
    CHECK(a.c(0, 3, 3) == Rational(-1));
    CHECK(a.c(2, 3, 1) == Rational(1));
    CHECK(a.classify() == StructureClass::solvable);

    SECTION("the metric restricts to the base exactly") {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(ext.result.metric()(i + 1, j + 1) == ext.base.metric()(i, j));
        CHECK(ext.result.metric()(0, 0) == ParamScalar::parameter("h"));
        CHECK(ext.result.metric()(0, 1).is_zero());
    }
    SECTION("non-derivations are rejected") {
        CHECK_THROWS_AS(build_solvable_extension(catalog::h3_metric(H3Metric::g1),
                                                 RationalMatrix::identity(3), "h"),
                        NotADerivation);
    }
    SECTION("oscillator extension bracket [H, Q] = (m/2) P") {
        const auto base = catalog::oscillator(1, {Rational(1)}, Rational(0));
        const auto s = solve_algebraic_soliton(base);
        REQUIRE(s);
        const auto osc_ext = build_solvable_extension(base, s->d, "h");
        CHECK(osc_ext.result.algebra().c(0, 4, 1) == Rational(1, 2));
    }
}

TEST_CASE("Einstein parameter solve on the worked extensions") {
    SECTION("h3 g1: h = -4 with constant 3/2") {
        const auto r = einstein_parameter_solve(h3_g1_extension());
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0] == std::pair<Rational, Rational>(Rational(-4), Rational(3, 2)));
        CHECK_FALSE(r.einstein_for_all);
    }
    SECTION("E(2) and E(1,1): h = -4 with constant 2") {
        for (const auto& base : {catalog::euclidean_motion(), catalog::minkowski_motion()}) {
            const auto s = solve_algebraic_soliton(base);
            REQUIRE(s);
            const auto r = einstein_parameter_solve(build_solvable_extension(base, s->d, "h"));
            REQUIRE(r.solutions.size() == 1);
            CHECK(r.solutions[0] == std::pair<Rational, Rational>(Rational(-4), Rational(2)));
        }
    }
    SECTION("oscillator: empty, with the Ric(Q,Q) = m/2 obstruction reported") {
        const auto base = catalog::oscillator(1, {Rational(1)}, Rational(0));
        const auto s = solve_algebraic_soliton(base);
        const auto ext = build_solvable_extension(base, s->d, "h");
        const auto ric = ricci_tensor(ext.result);
        CHECK(nonzero_entries_str(ric) == "(5,5)=1/2");
        const auto r = einstein_parameter_solve(ext);
        CHECK(r.solutions.empty());
        CHECK_FALSE(r.einstein_for_all);
        REQUIRE(r.residual_numerators.size() == 1);
        CHECK(r.residual_numerators[0] == Polynomial(Rational(1, 2)));
    }
    SECTION("Heisenberg extensions by D = diag(b I_2n, 2b): Einstein at a = -4 b^2") {
        for (long n = 1; n <= 3; ++n) {
            const auto base = catalog::heisenberg(n);
            const std::size_t N = static_cast<std::size_t>(2 * n + 1);
            const Rational b = Rational(1 - 5 * n, 4);
            RationalMatrix d(N, N);
            for (std::size_t i = 0; i + 1 < N; ++i) d(i, i) = b;
            d(N - 1, N - 1) = Rational(2) * b;
            const auto r = einstein_parameter_solve(build_solvable_extension(base, d, "a"));
            REQUIRE(r.solutions.size() == 1);
            CHECK(r.solutions[0].first == Rational(-4) * b * b);
            CHECK(r.solutions[0].second == Rational(n + 2, 2));
        }
    }
}

TEST_CASE("every solved parameter instantiates to an Einstein metric") {
    for (const auto& c : catalog::catalog_cases()) {
        auto metric = c.build();
        if (!metric.is_parameter_free()) continue;
        const auto s = solve_algebraic_soliton(metric);
        if (!s) continue;
        CAPTURE(c.id);
        const auto ext = build_solvable_extension(metric, s->d, c.ext_param);
        for (const auto& [h, lambda] : einstein_parameter_solve(ext).solutions) {
            const auto instantiated = ext.result.instantiate(h);
            CHECK(einstein_constant(instantiated) == lambda);
        }
    }
}

TEST_CASE("extension curvature identities hold as rational functions") {
    const auto ext = h3_g1_extension();
    CHECK(testsupport::check_connection_identities(ext.result, "h3:g1 ext").empty());
    CHECK(testsupport::check_curvature_symmetries(ext.result, "h3:g1 ext").empty());
    // Symbolic Ricci entries of the extension: Ric(H,H) = -6, Ric(F1,F1) = -8/h - 1/2.
    const auto ric = ricci_tensor(ext.result);
    CHECK(ric(0, 0) == ParamScalar(Rational(-6)));
    CHECK(ric(1, 1) == parse_scalar("-8/h - 1/2", std::string("h")));
    CHECK(ric(2, 2) == parse_scalar("-4/h + 1/2", std::string("h")));
    CHECK(ric(3, 3) == parse_scalar("4/h - 1/2", std::string("h")));
}

TEST_CASE("remark-4.4-type extensions") {
    SECTION("the derivation family always passes the Leibniz check") {
        const auto ext = catalog::remark44_extension(Rational(2), Rational(-1), Rational(1, 2),
                                                     Rational(3), Rational(1), Rational(2));
        CHECK(ext.result.dim() == 5);
        CHECK(is_derivation(ext.base.algebra(), ext.d));
    }
    SECTION("dilation branch: Einstein at h = 4 k b") {
        const auto ext = catalog::remark44_extension(Rational(0), Rational(0), Rational(1),
                                                     Rational(0), Rational(1), Rational(1));
        const auto r = einstein_parameter_solve(ext);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0] == std::pair<Rational, Rational>(Rational(4), Rational(-1)));
    }
    SECTION("translation branch: Ricci-flat at h = 6") {
        const auto ext = catalog::remark44_extension(Rational(1), Rational(1), Rational(0),
                                                     Rational(0), Rational(0), Rational(2));
        const auto r = einstein_parameter_solve(ext);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0] == std::pair<Rational, Rational>(Rational(6), Rational(0)));
    }
}

TEST_CASE("parameter placement is validated") {
    const auto base = catalog::h3_metric(H3Metric::g1);
    ScalarMatrix g(3, 3);
    g(0, 0) = 1;
    g(1, 1) = ParamScalar::parameter("h");
    g(2, 2) = Rational(-1);
    const auto bad = MetricLieAlgebra::make(base.algebra(), g);
    CHECK_THROWS_AS(einstein_parameter_solve(bad), ParameterizedValue);
    CHECK_THROWS_AS(einstein_parameter_solve(base), ParameterizedValue);
}
