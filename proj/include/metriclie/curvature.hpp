#pragma once

#include <optional>
#include <vector>

#include "metriclie/metric_lie_algebra.hpp"

namespace metriclie {

/// Levi-Civita connection in the frame: gamma(i)(k, j) is the e_k-coefficient
/// of nabla_{e_i} e_j.
class Connection {
public:
    Connection(std::size_t dim, std::vector<ScalarMatrix> gammas)
        : dim_(dim), gammas_(std::move(gammas)) {}

    std::size_t dim() const { return dim_; }
    const ScalarMatrix& gamma(std::size_t i) const { return gammas_[i]; }
    const ParamScalar& coefficient(std::size_t k, std::size_t i, std::size_t j) const {
        return gammas_[i](k, j);
    }

private:
    std::size_t dim_;
    std::vector<ScalarMatrix> gammas_;
};

/// Koszul formula on left-invariant fields:
///   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
inline Connection levi_civita(const MetricLieAlgebra& m) {
    const std::size_t n = m.dim();
    const auto& a = m.algebra();
    const ScalarMatrix& g = m.metric();
    const ScalarMatrix ginv = inverse(g);
    const ParamScalar half = ParamScalar(Rational(1, 2));

    // bracket_pairing(i, j, k) = g([e_i, e_j], e_k)
    auto bracket_pairing = [&](std::size_t i, std::size_t j, std::size_t k) {
        ParamScalar v(0);
        for (std::size_t p = 0; p < n; ++p) {
            const Rational& c = a.c(i, j, p);
            if (!c.is_zero()) v += ParamScalar(c) * g(p, k);
        }
        return v;
    };

    std::vector<ScalarMatrix> gammas(n, ScalarMatrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ParamScalar> rhs(n, ParamScalar(0));
            for (std::size_t k = 0; k < n; ++k)
                rhs[k] = half * (bracket_pairing(i, j, k) - bracket_pairing(j, k, i) +
                                 bracket_pairing(k, i, j));
            const auto col = ginv * rhs;
            for (std::size_t k = 0; k < n; ++k) gammas[i](k, j) = col[k];
        }
    return Connection(n, std::move(gammas));
}

/// Full curvature tensor of R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
/// - nabla_{[X,Y]} Z; coefficient(l, i, j, k) is the e_l-component of
/// R(e_i, e_j) e_k.
class CurvatureTensor {
public:
    explicit CurvatureTensor(std::size_t dim)
        : dim_(dim), r_(dim * dim * dim * dim, ParamScalar(0)) {}

    std::size_t dim() const { return dim_; }
    const ParamScalar& coefficient(std::size_t l, std::size_t i, std::size_t j,
                                   std::size_t k) const {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    ParamScalar& coefficient(std::size_t l, std::size_t i, std::size_t j, std::size_t k) {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }

    bool is_zero() const {
        for (const auto& x : r_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<ParamScalar> r_;
};

inline CurvatureTensor curvature_tensor(const MetricLieAlgebra& m, const Connection& conn) {
    const std::size_t n = m.dim();
    const auto& a = m.algebra();
    CurvatureTensor out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    ParamScalar v(0);
                    for (std::size_t p = 0; p < n; ++p) {
                        const ParamScalar& gjk = conn.coefficient(p, j, k);
                        if (!gjk.is_zero()) v += gjk * conn.coefficient(l, i, p);
                        const ParamScalar& gik = conn.coefficient(p, i, k);
                        if (!gik.is_zero()) v -= gik * conn.coefficient(l, j, p);
                        const Rational& c = a.c(i, j, p);
                        if (!c.is_zero()) v -= ParamScalar(c) * conn.coefficient(l, p, k);
                    }
                    out.coefficient(l, i, j, k) = v;
                    out.coefficient(l, j, i, k) = -v;
                }
    return out;
}

inline CurvatureTensor curvature_tensor(const MetricLieAlgebra& m) {
    return curvature_tensor(m, levi_civita(m));
}

/// Ricci data in the frame. Convention: Ric(Y, Z) = trace of X -> R(X, Y) Z,
/// the operator is rc = g^{-1} Ric, and the scalar curvature its trace.
struct RicciData {
    ScalarMatrix ric;
    ScalarMatrix op;
    ParamScalar scalar;
};

inline RicciData ricci_data(const MetricLieAlgebra& m, const Connection& conn) {
    const std::size_t n = m.dim();
    const auto& a = m.algebra();
    // tau[p] = sum_i Gamma^i_{i p}
    std::vector<ParamScalar> tau(n, ParamScalar(0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i) tau[p] += conn.coefficient(i, i, p);

    ScalarMatrix ric(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            ParamScalar v(0);
            for (std::size_t p = 0; p < n; ++p) {
                const ParamScalar& gjk = conn.coefficient(p, j, k);
                if (!gjk.is_zero()) v += gjk * tau[p];
                for (std::size_t i = 0; i < n; ++i) {
                    const ParamScalar& gik = conn.coefficient(p, i, k);
                    if (!gik.is_zero()) v -= gik * conn.coefficient(i, j, p);
                    const Rational& c = a.c(i, j, p);
                    if (!c.is_zero()) v -= ParamScalar(c) * conn.coefficient(i, p, k);
                }
            }
            ric(j, k) = v;
        }

    RicciData out{std::move(ric), ScalarMatrix(n, n), ParamScalar(0)};
    out.op = inverse(m.metric()) * out.ric;
    out.scalar = trace(out.op);
    return out;
}

inline RicciData ricci_data(const MetricLieAlgebra& m) { return ricci_data(m, levi_civita(m)); }

inline ScalarMatrix ricci_tensor(const MetricLieAlgebra& m) { return ricci_data(m).ric; }
inline ScalarMatrix ricci_operator(const MetricLieAlgebra& m) { return ricci_data(m).op; }
inline ParamScalar scalar_curvature(const MetricLieAlgebra& m) { return ricci_data(m).scalar; }

/// Einstein constant lambda with Ric = lambda g, if one exists; a Ricci-flat
/// metric yields 0. The metric must be parameter-free.
inline std::optional<Rational> einstein_constant(const MetricLieAlgebra& m) {
    if (!m.is_parameter_free())
        throw ParameterizedValue("einstein_constant requires an instantiated metric");
    const RationalMatrix g = m.metric_rational();
    const RationalMatrix ric = to_rational_matrix(ricci_tensor(m));
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < g.rows() && !lambda; ++i)
        for (std::size_t j = 0; j < g.cols() && !lambda; ++j)
            if (!g(i, j).is_zero()) lambda = ric(i, j) / g(i, j);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!(ric(i, j) == *lambda * g(i, j))) return std::nullopt;
    return lambda;
}

inline bool is_flat(const MetricLieAlgebra& m) { return curvature_tensor(m).is_zero(); }

} // namespace metriclie
