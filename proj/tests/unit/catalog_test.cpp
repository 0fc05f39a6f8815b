#include <catch2/catch_amalgamated.hpp>

#include <metriclie/catalog.hpp>

using namespace metriclie;

TEST_CASE("every catalog expectation reproduces exactly") {
    const auto results = catalog::verify_all(true);
    CHECK(results.size() >= 90);
    for (const auto& r : results) {
        CAPTURE(r.id, r.key, r.expected, r.actual);
        CHECK(r.ok);
    }
}

TEST_CASE("verify-all is deterministic and ordered by id") {
    const auto parallel = catalog::verify_all(true);
    const auto sequential = catalog::verify_all(false);
    REQUIRE(parallel.size() == sequential.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
        CHECK(parallel[i].id == sequential[i].id);
        CHECK(parallel[i].key == sequential[i].key);
        CHECK(parallel[i].actual == sequential[i].actual);
    }
    for (std::size_t i = 1; i < parallel.size(); ++i) CHECK(parallel[i - 1].id <= parallel[i].id);
}

TEST_CASE("catalog constructor preconditions") {
    CHECK_THROWS_AS(catalog::heisenberg(0), Error);
    CHECK_THROWS_AS(catalog::oscillator(0, {}, Rational(0)), Error);
    CHECK_THROWS_AS(catalog::oscillator(2, {Rational(1)}, Rational(0)), DimensionMismatch);
    CHECK_THROWS_AS(catalog::oscillator(1, {Rational(-1)}, Rational(0)), Error);
    CHECK_THROWS_AS(catalog::oscillator(1, {Rational(0)}, Rational(0)), Error);
}

TEST_CASE("catalog ids build on demand") {
    CHECK(catalog::build_from_id("heisenberg:n=4").metric.dim() == 9);
    CHECK(catalog::build_from_id("h3:g2").metric.dim() == 3);
    CHECK(catalog::build_from_id("e11").metric.dim() == 3);

    const auto osc = catalog::build_from_id("oscillator:m=1,eps=1");
    CHECK_FALSE(osc.metric.is_parameter_free());
    REQUIRE(osc.family_value.has_value());
    CHECK(*osc.family_value == Rational(1));

    const auto osc_half = catalog::build_from_id("oscillator:m=1,eps=1/2");
    CHECK(osc_half.metric.is_parameter_free());
    CHECK_FALSE(osc_half.family_value.has_value());

    CHECK_THROWS_AS(catalog::build_from_id("so3"), Error);
    CHECK_THROWS_AS(catalog::build_from_id("h3:g4"), Error);
    CHECK_THROWS_AS(catalog::build_from_id("heisenberg:m=2"), Error);
    CHECK_THROWS_AS(catalog::build_from_id("remark44:a=1"), Error);
    CHECK_THROWS_AS(catalog::build_from_id("oscillator:m=1,eps=bad"), Error);
}

TEST_CASE("listed ids and find_case agree") {
    for (const auto& c : catalog::catalog_cases()) {
        CAPTURE(c.id);
        CHECK(catalog::find_case(c.id) != nullptr);
        CHECK_NOTHROW(catalog::build_from_id(c.id));
    }
    CHECK(catalog::find_case("nope") == nullptr);
}
