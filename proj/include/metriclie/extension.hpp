#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metriclie/soliton.hpp"

namespace metriclie {

/// Metric solvable extension s = R H + g: the new generator H acts on the base
/// by a derivation D, base brackets are unchanged, and the metric extends
/// orthogonally with g~(H, H) = h symbolic.
struct ExtensionSpec {
    MetricLieAlgebra base;
    RationalMatrix d;
    std::string param;
    MetricLieAlgebra result; // dim n+1, basis (H, e_1..e_n)
};

inline ExtensionSpec build_solvable_extension(const MetricLieAlgebra& base,
                                              const RationalMatrix& d, const std::string& param) {
    if (!base.is_parameter_free())
        throw ParameterizedValue("extension base must be parameter-free");
    const std::size_t n = base.dim();
    if (!is_derivation(base.algebra(), d))
        throw NotADerivation("[H, .] must act by a derivation of the base algebra");

    std::vector<BracketTerm> brackets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BracketTerm b{i + 1, j + 1, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (!base.algebra().c(i, j, k).is_zero()) b.out[k + 1] = base.algebra().c(i, j, k);
            if (!b.out.empty()) brackets.push_back(std::move(b));
        }
    for (std::size_t i = 0; i < n; ++i) {
        BracketTerm b{0, i + 1, {}};
        for (std::size_t k = 0; k < n; ++k)
            if (!d(k, i).is_zero()) b.out[k + 1] = d(k, i);
        if (!b.out.empty()) brackets.push_back(std::move(b));
    }
    std::vector<std::string> names{"H"};
    for (std::size_t i = 0; i < n; ++i) names.push_back(base.algebra().basis_name(i));
    // Jacobi is re-verified here; it can only fail if d were not a derivation.
    LieAlgebra extended = LieAlgebra::make(n + 1, brackets, std::move(names));

    ScalarMatrix g(n + 1, n + 1);
    g(0, 0) = ParamScalar::parameter(param);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i + 1, j + 1) = base.metric()(i, j);
    return ExtensionSpec{base, d, param, MetricLieAlgebra::make(std::move(extended), std::move(g))};
}

/// Outcome of the one-parameter Einstein condition on an extension.
///
/// `solutions` holds the rational parameter values h (h != 0, metric still
/// nondegenerate) with their Einstein constants. `residual_numerators` is the
/// polynomial system whose common roots were sought; when no rational root
/// exists it documents possible irrational solutions.
struct EinsteinParameterResult {
    std::vector<std::pair<Rational, Rational>> solutions;
    std::vector<Polynomial> residual_numerators;
    bool einstein_for_all = false;
};

/// Solves Ric = lambda g~ over the metric parameter, with lambda eliminated as
/// Ric(H,H)/g~(H,H); valid because H is orthogonal to the base and h != 0.
inline EinsteinParameterResult einstein_parameter_solve(const MetricLieAlgebra& ext) {
    if (ext.is_parameter_free())
        throw ParameterizedValue("einstein_parameter_solve needs a parameterized metric");
    const std::size_t n = ext.dim();
    const ScalarMatrix& g = ext.metric();
    if (g(0, 0).is_constant())
        throw ParameterizedValue("metric parameter must appear in the (H, H) slot");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i != 0 || j != 0) && !g(i, j).is_constant())
                throw ParameterizedValue("metric parameter appears outside the (H, H) slot");

    const ScalarMatrix ric = ricci_tensor(ext);
    const ParamScalar lambda = ric(0, 0) / g(0, 0);

    EinsteinParameterResult out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const ParamScalar residual = ric(i, j) - lambda * g(i, j);
            if (!residual.is_zero()) out.residual_numerators.push_back(residual.numerator());
        }
    if (out.residual_numerators.empty()) {
        out.einstein_for_all = true;
        return out;
    }

    Polynomial common;
    for (const auto& p : out.residual_numerators) common = Polynomial::gcd(common, p);
    if (common.degree() < 1) return out; // no common zero of the residual system

    const ParamScalar detg = det(g);
    for (const auto& root : rational_roots(common)) {
        if (root.is_zero()) continue;
        if (detg.evaluate(root).is_zero()) continue;
        out.solutions.emplace_back(root, lambda.evaluate(root));
    }
    return out;
}

inline EinsteinParameterResult einstein_parameter_solve(const ExtensionSpec& ext) {
    return einstein_parameter_solve(ext.result);
}

} // namespace metriclie
