#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "metriclie/derivations.hpp"
#include "metriclie/metric_lie_algebra.hpp"

namespace metriclie::flow {

/// Metric along a flow: exact algebra, floating-point frame metric, time.
struct FloatMetricState {
    LieAlgebra algebra;
    Eigen::MatrixXd g;
    double t = 0.0;
};

inline constexpr double kDegeneracyThreshold = 1e-10;

/// Float mirror of the exact Ricci pipeline: Koszul solve for the connection,
/// then the curvature contraction. Kept independent of the exact code path so
/// the two can be checked against each other.
inline Eigen::MatrixXd ricci_float(const LieAlgebra& algebra, const Eigen::MatrixXd& g,
                                   double t_for_error = 0.0) {
    const auto n = static_cast<Eigen::Index>(algebra.dim());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
    if (std::abs(lu.determinant()) < kDegeneracyThreshold) throw FlowDegenerate(t_for_error);

    auto c = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        return algebra.c(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                         static_cast<std::size_t>(k)).to_double();
    };
    auto pairing = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        double v = 0;
        for (Eigen::Index p = 0; p < n; ++p) v += c(i, j, p) * g(p, k);
        return v;
    };

    // gamma[i](k, j): e_k-coefficient of nabla_{e_i} e_j
    std::vector<Eigen::MatrixXd> gamma(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index k = 0; k < n; ++k)
                rhs(k) = 0.5 * (pairing(i, j, k) - pairing(j, k, i) + pairing(k, i, j));
            gamma[static_cast<std::size_t>(i)].col(j) = lu.solve(rhs);
        }

    Eigen::VectorXd tau = Eigen::VectorXd::Zero(n);
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index i = 0; i < n; ++i) tau(p) += gamma[static_cast<std::size_t>(i)](i, p);

    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            double v = 0;
            for (Eigen::Index p = 0; p < n; ++p) {
                v += gamma[static_cast<std::size_t>(j)](p, k) * tau(p);
                for (Eigen::Index i = 0; i < n; ++i) {
                    v -= gamma[static_cast<std::size_t>(i)](p, k) *
                         gamma[static_cast<std::size_t>(j)](i, p);
                    v -= c(i, j, p) * gamma[static_cast<std::size_t>(p)](i, k);
                }
            }
            ric(j, k) = v;
        }
    return ric;
}

/// Classical fixed-step RK4 on dg/dt = -2 Ric(g); the trajectory is sampled at
/// every step, initial state included. Aborts with FlowDegenerate when |det g|
/// falls under the threshold.
inline std::vector<FloatMetricState> integrate(const FloatMetricState& initial, double t_end,
                                               double dt) {
    if (dt <= 0) throw Error("flow step must be positive");
    if (t_end <= initial.t) throw Error("flow end time must exceed start time");

    auto f = [&](const Eigen::MatrixXd& g, double t) {
        Eigen::MatrixXd ric = ricci_float(initial.algebra, g, t);
        ric = 0.5 * (ric + ric.transpose()); // keep the state exactly symmetric
        return Eigen::MatrixXd(-2.0 * ric);
    };

    std::vector<FloatMetricState> trajectory{initial};
    Eigen::MatrixXd g = initial.g;
    double t = initial.t;
    const double det0 = g.determinant();
    if (std::abs(det0) < kDegeneracyThreshold) throw FlowDegenerate(t);
    const auto steps = static_cast<long>(std::llround((t_end - initial.t) / dt));
    for (long s = 0; s < steps; ++s) {
        const Eigen::MatrixXd k1 = f(g, t);
        const Eigen::MatrixXd k2 = f(g + 0.5 * dt * k1, t + 0.5 * dt);
        const Eigen::MatrixXd k3 = f(g + 0.5 * dt * k2, t + 0.5 * dt);
        const Eigen::MatrixXd k4 = f(g + dt * k3, t + dt);
        g += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = initial.t + static_cast<double>(s + 1) * dt;
        // det(g) bounded away from 0 along the flow: a vanishing or sign-flipped
        // determinant (a fixed step can jump across the zero set) aborts.
        const double d = g.determinant();
        if (!g.allFinite() || std::abs(d) < kDegeneracyThreshold || std::signbit(d) != std::signbit(det0))
            throw FlowDegenerate(t);
        trajectory.push_back({initial.algebra, g, t});
    }
    return trajectory;
}

/// Least-squares fit of rc(g) = c I + sum_k a_k B_k over the exact derivation
/// basis of the algebra; the returned value is the 2-norm of the unfittable
/// remainder. Stays at numerical noise along the flow of an algebraic soliton.
class SolitonResidualFitter {
public:
    explicit SolitonResidualFitter(const LieAlgebra& algebra)
        : n_(static_cast<Eigen::Index>(algebra.dim())) {
        const DerivationBasis der = derivation_basis(algebra);
        basis_ = Eigen::MatrixXd(n_ * n_, 1 + static_cast<Eigen::Index>(der.dim));
        basis_.col(0) =
            vectorize(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n_, n_)));
        for (std::size_t k = 0; k < der.dim; ++k) {
            Eigen::MatrixXd b(n_, n_);
            for (Eigen::Index r = 0; r < n_; ++r)
                for (Eigen::Index c = 0; c < n_; ++c)
                    b(r, c) = der.basis[k](static_cast<std::size_t>(r), static_cast<std::size_t>(c))
                                  .to_double();
            basis_.col(1 + static_cast<Eigen::Index>(k)) = vectorize(b);
        }
    }

    double residual(const LieAlgebra& algebra, const Eigen::MatrixXd& g, double t = 0.0) const {
        const Eigen::MatrixXd ric = ricci_float(algebra, g, t);
        const Eigen::MatrixXd rc = Eigen::FullPivLU<Eigen::MatrixXd>(g).solve(ric);
        const Eigen::VectorXd b = vectorize(rc);
        const Eigen::VectorXd x = basis_.colPivHouseholderQr().solve(b);
        return (basis_ * x - b).norm();
    }

private:
    static Eigen::VectorXd vectorize(const Eigen::MatrixXd& m) {
        return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
    }

    Eigen::Index n_;
    Eigen::MatrixXd basis_;
};

inline double soliton_residual(const FloatMetricState& state) {
    return SolitonResidualFitter(state.algebra).residual(state.algebra, state.g, state.t);
}

/// Exact metric converted to floats; parameter-free metrics only.
inline FloatMetricState make_float_state(const MetricLieAlgebra& m, double t = 0.0) {
    const RationalMatrix g = m.metric_rational();
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::MatrixXd gf(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            gf(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
    return {m.algebra(), gf, t};
}

} // namespace metriclie::flow
