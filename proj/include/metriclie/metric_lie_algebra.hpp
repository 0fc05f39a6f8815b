#pragma once

#include <optional>
#include <string>
#include <utility>

#include "metriclie/lie_algebra.hpp"

namespace metriclie {

/// Lie algebra with a constant-frame symmetric nondegenerate metric.
///
/// Entries may depend on one named parameter; nondegeneracy then means
/// det(g) is nonzero as a rational function.
class MetricLieAlgebra {
public:
    static MetricLieAlgebra make(LieAlgebra algebra, ScalarMatrix metric) {
        const std::size_t n = algebra.dim();
        if (metric.rows() != n || metric.cols() != n)
            throw DimensionMismatch("metric shape does not match algebra dimension");
        if (!metric.is_symmetric()) throw NotSymmetric("metric matrix is not symmetric");
        std::optional<std::string> param;
        for (const auto& entry : metric.entries())
            if (!entry.is_constant()) {
                if (param && *param != *entry.parameter_name())
                    throw MixedParameters(*param, *entry.parameter_name());
                param = entry.parameter_name();
            }
        if (det(metric).is_zero())
            throw DegenerateMetric("metric determinant vanishes identically");
        return MetricLieAlgebra(std::move(algebra), std::move(metric), std::move(param));
    }

    static MetricLieAlgebra make(LieAlgebra algebra, const RationalMatrix& metric) {
        return make(std::move(algebra), to_scalar_matrix(metric));
    }

    const LieAlgebra& algebra() const { return algebra_; }
    const ScalarMatrix& metric() const { return g_; }
    const std::optional<std::string>& parameter() const { return param_; }
    std::size_t dim() const { return algebra_.dim(); }

    bool is_parameter_free() const { return !param_.has_value(); }

    RationalMatrix metric_rational() const { return to_rational_matrix(g_); }

    /// Substitutes the parameter by a rational value; the instantiated metric
    /// must stay nondegenerate.
    MetricLieAlgebra instantiate(const Rational& value) const {
        if (is_parameter_free()) return *this;
        return make(algebra_, evaluate_matrix(g_, value));
    }

    /// Same algebra with metric s*g, s a nonzero rational.
    MetricLieAlgebra scaled(const Rational& s) const {
        return make(algebra_, ParamScalar(s) * g_);
    }

private:
    MetricLieAlgebra(LieAlgebra algebra, ScalarMatrix g, std::optional<std::string> param)
        : algebra_(std::move(algebra)), g_(std::move(g)), param_(std::move(param)) {}

    LieAlgebra algebra_;
    ScalarMatrix g_;
    std::optional<std::string> param_;
};

/// Signs (plus, minus) of a symmetric nondegenerate matrix, found by exact
/// congruence diagonalization. Parameterized metrics are sampled at a rational
/// point where the determinant does not vanish. Informational only.
inline std::pair<std::size_t, std::size_t> signature(const MetricLieAlgebra& m) {
    RationalMatrix g(0, 0);
    if (m.is_parameter_free()) {
        g = m.metric_rational();
    } else {
        const ParamScalar d = det(m.metric());
        Rational sample = 1;
        for (long long k = 1;; ++k) {
            sample = Rational(k);
            try {
                if (!d.evaluate(sample).is_zero()) break;
            } catch (const EvaluationError&) {
            }
            sample = Rational(-k);
            try {
                if (!d.evaluate(sample).is_zero()) break;
            } catch (const EvaluationError&) {
            }
        }
        g = evaluate_matrix(m.metric(), sample);
    }

    const std::size_t n = g.rows();
    std::size_t plus = 0, minus = 0;
    // Congruence reduction: clear one basis direction per step.
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && !g(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            // All remaining diagonal entries vanish; make one nonzero via e_i += e_j.
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && !g(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break; // remaining block is zero (degenerate input)
            for (std::size_t k = 0; k < n; ++k) g(a, k) += g(b, k);
            for (std::size_t k = 0; k < n; ++k) g(k, a) += g(k, b);
            p = a;
        }
        const Rational piv = g(p, p);
        (piv.sign() > 0 ? plus : minus) += 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || g(i, p).is_zero()) continue;
            const Rational f = g(i, p) / piv;
            for (std::size_t k = 0; k < n; ++k) g(i, k) -= f * g(p, k);
            for (std::size_t k = 0; k < n; ++k) g(k, i) -= f * g(k, p);
        }
        done[p] = true;
    }
    return {plus, minus};
}

} // namespace metriclie
