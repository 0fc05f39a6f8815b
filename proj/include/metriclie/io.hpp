#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metriclie/render.hpp"
#include "metriclie/scalar_parser.hpp"

namespace metriclie::io {

using json = nlohmann::ordered_json;

/// On-disk description of a metric Lie algebra. Indices are 1-based in the
/// file (matching the F_1..F_N conventions) and 0-based in memory.
struct InputDocument {
    std::string name;
    std::size_t dim = 0;
    std::optional<std::string> parameter;
    std::vector<BracketTerm> brackets;
    std::vector<std::vector<std::string>> metric; // scalar-expression strings
};

namespace detail {

inline std::string scalar_expression(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError(where, "expected a scalar-expression string");
}

inline std::size_t one_based_index(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_number_integer())
        throw InputError(where, "expected a 1-based basis index");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw InputError(where, "basis index " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

} // namespace detail

inline InputDocument parse_input_document(const json& j) {
    if (!j.is_object()) throw InputError("$", "input document must be a JSON object");
    InputDocument doc;
    doc.name = j.value("name", std::string("input"));

    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw InputError("$.dim", "positive integer dimension required");
    doc.dim = j["dim"].get<std::size_t>();

    if (j.contains("parameters")) {
        const auto& params = j["parameters"];
        if (!params.is_array() || params.size() > 1)
            throw InputError("$.parameters", "at most one parameter name is supported");
        if (params.size() == 1) {
            if (!params[0].is_string())
                throw InputError("$.parameters[0]", "parameter name must be a string");
            doc.parameter = params[0].get<std::string>();
        }
    }

    if (j.contains("brackets")) {
        const auto& brackets = j["brackets"];
        if (!brackets.is_array()) throw InputError("$.brackets", "expected an array");
        for (std::size_t b = 0; b < brackets.size(); ++b) {
            const std::string where = "$.brackets[" + std::to_string(b) + "]";
            const auto& entry = brackets[b];
            if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
                !entry.contains("out"))
                throw InputError(where, "expected an object with keys i, j, out");
            BracketTerm term;
            term.i = detail::one_based_index(entry["i"], doc.dim, where + ".i");
            term.j = detail::one_based_index(entry["j"], doc.dim, where + ".j");
            if (!entry["out"].is_object())
                throw InputError(where + ".out", "expected an object mapping index to expression");
            for (const auto& [key, value] : entry["out"].items()) {
                std::size_t k = 0;
                try {
                    k = detail::one_based_index(json(std::stoll(key)), doc.dim, where + ".out");
                } catch (const std::exception&) {
                    throw InputError(where + ".out", "key '" + key + "' is not a basis index");
                }
                const std::string expr =
                    detail::scalar_expression(value, where + ".out." + key);
                try {
                    // Structure constants are plain rationals; no parameter here.
                    term.out[k] = parse_scalar(expr).as_rational();
                } catch (const std::exception& e) {
                    throw InputError(where + ".out." + key, e.what());
                }
            }
            doc.brackets.push_back(std::move(term));
        }
    }

    if (!j.contains("metric") || !j["metric"].is_array() || j["metric"].size() != doc.dim)
        throw InputError("$.metric", "expected a dim x dim array of scalar expressions");
    for (std::size_t r = 0; r < doc.dim; ++r) {
        const auto& row = j["metric"][r];
        const std::string where = "$.metric[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != doc.dim)
            throw InputError(where, "expected a row of length " + std::to_string(doc.dim));
        std::vector<std::string> out_row;
        for (std::size_t c = 0; c < doc.dim; ++c)
            out_row.push_back(
                detail::scalar_expression(row[c], where + "[" + std::to_string(c) + "]"));
        doc.metric.push_back(std::move(out_row));
    }
    return doc;
}

inline InputDocument load_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(path, std::string("invalid JSON: ") + e.what());
    }
    return parse_input_document(j);
}

/// Validates and assembles the document into a metric Lie algebra; with
/// `substitute` the metric parameter is instantiated at the given rational.
inline MetricLieAlgebra build_metric(const InputDocument& doc,
                                     std::optional<Rational> substitute = std::nullopt) {
    LieAlgebra algebra = [&] {
        try {
            return LieAlgebra::make(doc.dim, doc.brackets);
        } catch (const JacobiViolation&) {
            throw;
        } catch (const Error& e) {
            throw InputError("$.brackets", e.what());
        }
    }();

    ScalarMatrix g(doc.dim, doc.dim);
    for (std::size_t r = 0; r < doc.dim; ++r)
        for (std::size_t c = 0; c < doc.dim; ++c) {
            const std::string where =
                "$.metric[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            try {
                g(r, c) = parse_scalar(doc.metric[r][c], doc.parameter);
            } catch (const std::exception& e) {
                throw InputError(where, e.what());
            }
        }
    auto metric = MetricLieAlgebra::make(std::move(algebra), std::move(g));
    if (substitute) {
        if (metric.is_parameter_free())
            throw InputError("$.parameters", "--param given but the document has no parameter");
        return metric.instantiate(*substitute);
    }
    return metric;
}

/// Inverse of the loader: a loadable document describing `m`. Used to export
/// built extensions.
inline json metric_to_document_json(const std::string& name, const MetricLieAlgebra& m) {
    json doc;
    doc["name"] = name;
    doc["dim"] = m.dim();
    if (m.parameter()) doc["parameters"] = json::array({*m.parameter()});
    json brackets = json::array();
    const auto& a = m.algebra();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i + 1; j < m.dim(); ++j) {
            json out = json::object();
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (!a.c(i, j, k).is_zero()) out[std::to_string(k + 1)] = a.c(i, j, k).str();
            if (!out.empty())
                brackets.push_back(json{{"i", i + 1}, {"j", j + 1}, {"out", out}});
        }
    doc["brackets"] = std::move(brackets);
    json metric = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.metric()(r, c).str());
        metric.push_back(std::move(row));
    }
    doc["metric"] = std::move(metric);
    return doc;
}

template <typename T>
json matrix_json(const Matrix<T>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).str());
    return out;
}

} // namespace metriclie::io
