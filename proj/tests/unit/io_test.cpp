#include <catch2/catch_amalgamated.hpp>

#include <metriclie/catalog.hpp>
#include <metriclie/io.hpp>

#include <fstream>

using namespace metriclie;
using metriclie::io::json;

namespace {

const std::string kFixtures = METRICLIE_FIXTURES_DIR;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

} // namespace

TEST_CASE("fixtures reproduce the catalog objects") {
    const json manifest = parse_file(kFixtures + "/manifest.json");
    REQUIRE(manifest.size() >= 17);
    for (const auto& [id, filename] : manifest.items()) {
        CAPTURE(id);
        const auto doc = io::load_input_file(kFixtures + "/" + filename.get<std::string>());
        const auto from_file = io::build_metric(doc);
        const auto from_catalog = catalog::build_from_id(id).metric;
        REQUIRE(from_file.dim() == from_catalog.dim());
        CHECK(from_file.metric() == from_catalog.metric());
        for (std::size_t i = 0; i < from_file.dim(); ++i)
            for (std::size_t j = 0; j < from_file.dim(); ++j)
                for (std::size_t k = 0; k < from_file.dim(); ++k)
                    CHECK(from_file.algebra().c(i, j, k) == from_catalog.algebra().c(i, j, k));
    }
}

TEST_CASE("document round trip through the exporter") {
    const auto ext = [&] {
        const auto base = catalog::euclidean_motion();
        const auto s = solve_algebraic_soliton(base);
        REQUIRE(s);
        return build_solvable_extension(base, s->d, "h");
    }();
    const json doc_json = io::metric_to_document_json("e2 extension", ext.result);
    const auto doc = io::parse_input_document(doc_json);
    const auto rebuilt = io::build_metric(doc);
    CHECK(rebuilt.metric() == ext.result.metric());
    CHECK(rebuilt.parameter() == ext.result.parameter());
    const auto solved = einstein_parameter_solve(rebuilt);
    REQUIRE(solved.solutions.size() == 1);
    CHECK(solved.solutions[0].first == Rational(-4));
}

TEST_CASE("reported scalars parse back to the exact values") {
    for (const auto& c : catalog::catalog_cases()) {
        const auto metric = c.build();
        if (!metric.is_parameter_free()) continue;
        const auto ric = ricci_tensor(metric);
        const json entries = io::matrix_json(ric);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < metric.dim(); ++i)
            for (std::size_t j = 0; j < metric.dim(); ++j, ++idx) {
                const auto parsed = parse_scalar(entries[idx].get<std::string>());
                CHECK(parsed == ric(i, j));
            }
    }
}

TEST_CASE("schema violations carry locations") {
    auto doc = R"({
      "name": "x", "dim": 3,
      "brackets": [{"i": 1, "j": 2, "out": {"3": "1"}}],
      "metric": [["1","0","0"],["0","1","0"],["0","0","-1"]]
    })"_json;

    SECTION("valid document loads") {
        const auto parsed = io::parse_input_document(doc);
        const auto metric = io::build_metric(parsed);
        CHECK(metric.dim() == 3);
        CHECK(metric.algebra().c(0, 1, 2) == Rational(1));
    }
    SECTION("1-based indices are enforced") {
        doc["brackets"][0]["i"] = 0;
        try {
            io::parse_input_document(doc);
            FAIL("expected InputError");
        } catch (const InputError& e) {
            CHECK(e.location() == "$.brackets[0].i");
        }
    }
    SECTION("metric shape") {
        doc["metric"] = json::array({json::array({"1", "0"})});
        CHECK_THROWS_AS(io::parse_input_document(doc), InputError);
    }
    SECTION("at most one parameter") {
        doc["parameters"] = json::array({"h", "t"});
        CHECK_THROWS_AS(io::parse_input_document(doc), InputError);
    }
    SECTION("expressions must parse") {
        doc["metric"][0][0] = "1 +";
        const auto parsed = io::parse_input_document(doc);
        try {
            io::build_metric(parsed);
            FAIL("expected InputError");
        } catch (const InputError& e) {
            CHECK(e.location() == "$.metric[0][0]");
        }
    }
    SECTION("parameters in brackets are rejected") {
        doc["parameters"] = json::array({"h"});
        doc["brackets"][0]["out"]["3"] = "h";
        CHECK_THROWS_AS(io::parse_input_document(doc), InputError);
    }
    SECTION("missing dim") {
        doc.erase("dim");
        CHECK_THROWS_AS(io::parse_input_document(doc), InputError);
    }
}

TEST_CASE("degenerate and non-Jacobi documents are rejected at build time") {
    auto degenerate = R"({
      "name": "osc-without-pq", "dim": 4,
      "brackets": [
        {"i": 2, "j": 3, "out": {"1": "1"}},
        {"i": 4, "j": 2, "out": {"3": "1"}},
        {"i": 4, "j": 3, "out": {"2": "-1"}}],
      "metric": [["0","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","0"]]
    })"_json;
    CHECK_THROWS_AS(io::build_metric(io::parse_input_document(degenerate)), DegenerateMetric);

    auto not_jacobi = R"({
      "name": "bad", "dim": 3,
      "brackets": [
        {"i": 1, "j": 2, "out": {"3": "1"}},
        {"i": 2, "j": 3, "out": {"1": "1"}},
        {"i": 3, "j": 1, "out": {"1": "1"}}],
      "metric": [["1","0","0"],["0","1","0"],["0","0","1"]]
    })"_json;
    CHECK_THROWS_AS(io::build_metric(io::parse_input_document(not_jacobi)), JacobiViolation);
}

TEST_CASE("substitution at load time") {
    const json manifest = parse_file(kFixtures + "/manifest.json");
    const auto file = manifest.at("remark44:a=0,atilde=0,b=1,c=0,k=1,lambda=1").get<std::string>();
    const auto doc = io::load_input_file(kFixtures + "/" + file);
    const auto at4 = io::build_metric(doc, Rational(4));
    CHECK(at4.is_parameter_free());
    CHECK(einstein_constant(at4) == Rational(-1));
    // The flat direction: substituting h = 0 degenerates the metric.
    CHECK_THROWS_AS(io::build_metric(doc, Rational(0)), DegenerateMetric);
}
