#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metriclie/curvature.hpp"
#include "metriclie/extension.hpp"
#include "metriclie/soliton.hpp"

namespace metriclie {

/// Plain-text renderings of engine values. Canonical-form scalars make these
/// strings usable for exact comparisons, not just for display.

template <typename T>
std::string matrix_str(const Matrix<T>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).str();
        }
    }
    return out + "]";
}

struct ConnectionEntry {
    std::size_t i, j, k; // 0-based: e_k-coefficient of nabla_{e_i} e_j
    ParamScalar value;
};

inline std::vector<ConnectionEntry> nonzero_connection_entries(const Connection& conn) {
    std::vector<ConnectionEntry> out;
    for (std::size_t i = 0; i < conn.dim(); ++i)
        for (std::size_t j = 0; j < conn.dim(); ++j)
            for (std::size_t k = 0; k < conn.dim(); ++k)
                if (!conn.coefficient(k, i, j).is_zero())
                    out.push_back({i, j, k, conn.coefficient(k, i, j)});
    return out;
}

/// "G(i,j,k)=v" with 1-based indices, ordered by (i, j, k).
inline std::string connection_str(const std::vector<ConnectionEntry>& entries) {
    if (entries.empty()) return "0";
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty()) out += "; ";
        out += "G(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," +
               std::to_string(e.k + 1) + ")=" + e.value.str();
    }
    return out;
}

inline std::string connection_str(const Connection& conn) {
    return connection_str(nonzero_connection_entries(conn));
}

inline std::string soliton_str(const std::optional<SolitonSolution>& s) {
    if (!s) return "none";
    return "c=" + s->c.str() + "; D=" + matrix_str(s->d) + "; class=" + to_string(s->cls);
}

inline std::string einstein_result_str(const EinsteinParameterResult& r) {
    if (r.einstein_for_all) return "einstein for every parameter value";
    if (r.solutions.empty()) {
        std::string out = "none; residual numerators: [";
        for (std::size_t i = 0; i < r.residual_numerators.size(); ++i) {
            if (i) out += ", ";
            out += r.residual_numerators[i].str("h");
        }
        return out + "]";
    }
    std::string out;
    for (const auto& [h, lambda] : r.solutions) {
        if (!out.empty()) out += ", ";
        out += "(h=" + h.str() + ", lambda=" + lambda.str() + ")";
    }
    return out;
}

/// Nonzero entries of a symmetric matrix, upper triangle, "(i,j)=v" 1-based.
inline std::string nonzero_entries_str(const ScalarMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                if (!out.empty()) out += "; ";
                out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" +
                       m(i, j).str();
            }
    return out.empty() ? "0" : out;
}

} // namespace metriclie
