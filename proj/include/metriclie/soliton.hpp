#pragma once

#include <optional>
#include <string>

#include "metriclie/curvature.hpp"
#include "metriclie/derivations.hpp"

namespace metriclie {

enum class SolitonClass { shrinking, steady, expanding, einstein, ricci_flat };

inline const char* to_string(SolitonClass c) {
    switch (c) {
        case SolitonClass::shrinking: return "shrinking";
        case SolitonClass::steady: return "steady";
        case SolitonClass::expanding: return "expanding";
        case SolitonClass::einstein: return "einstein";
        case SolitonClass::ricci_flat: return "ricci_flat";
    }
    return "?";
}

/// d = 0 means the metric is Einstein (Ricci-flat when c = 0 as well);
/// otherwise the sign of c decides.
inline SolitonClass classify_soliton(const Rational& c, const RationalMatrix& d) {
    if (d.is_zero()) return c.is_zero() ? SolitonClass::ricci_flat : SolitonClass::einstein;
    if (c.sign() > 0) return SolitonClass::shrinking;
    if (c.sign() < 0) return SolitonClass::expanding;
    return SolitonClass::steady;
}

/// Solution of rc = c Id + D with D in Der(g).
struct SolitonSolution {
    Rational c;
    RationalMatrix d;
    SolitonClass cls = SolitonClass::steady;
    bool unique = false;
};

namespace detail {

inline std::optional<SolitonSolution> solve_soliton_from_operator(const LieAlgebra& algebra,
                                                                  const RationalMatrix& rc) {
    const std::size_t n = algebra.dim();
    const DerivationBasis der = derivation_basis(algebra);
    // Unknowns: c first, then derivation coefficients in basis order.
    RationalMatrix system(n * n, 1 + der.dim);
    const auto id_vec = vec_column_major(RationalMatrix::identity(n));
    for (std::size_t r = 0; r < n * n; ++r) system(r, 0) = id_vec[r];
    for (std::size_t k = 0; k < der.dim; ++k) {
        const auto bv = vec_column_major(der.basis[k]);
        for (std::size_t r = 0; r < n * n; ++r) system(r, 1 + k) = bv[r];
    }
    const auto rhs = vec_column_major(rc);
    const auto result = solve(system, rhs);
    if (!result.solution) return std::nullopt;

    SolitonSolution out;
    out.c = (*result.solution)[0];
    out.d = rc - out.c * RationalMatrix::identity(n);
    out.unique = result.unique;
    out.cls = classify_soliton(out.c, out.d);
    return out;
}

} // namespace detail

/// Solves the algebraic Ricci soliton equation rc = c Id + D over Der(g).
/// Returns nothing exactly when the linear system is inconsistent.
inline std::optional<SolitonSolution> solve_algebraic_soliton(const MetricLieAlgebra& m) {
    if (!m.is_parameter_free())
        throw ParameterizedValue("soliton solve requires an instantiated metric");
    const RationalMatrix rc = to_rational_matrix(ricci_operator(m));
    return detail::solve_soliton_from_operator(m.algebra(), rc);
}

/// Variant for a one-parameter family of metrics: the Ricci operator is
/// computed symbolically and evaluated at `value` before solving. Usable at
/// parameter values where the metric matrix itself degenerates but the
/// family's curvature stays finite.
inline std::optional<SolitonSolution> solve_algebraic_soliton_at(const MetricLieAlgebra& m,
                                                                 const Rational& value) {
    if (m.is_parameter_free()) return solve_algebraic_soliton(m);
    const RationalMatrix rc = evaluate_matrix(ricci_operator(m), value);
    return detail::solve_soliton_from_operator(m.algebra(), rc);
}

/// Symmetric form (1/2)(g(D e_i, e_j) + g(e_i, D e_j)) = (1/2)(D^T g + g D),
/// the Lie derivative of g along the flow generated by D.
inline RationalMatrix lie_derivative_form(const MetricLieAlgebra& m, const RationalMatrix& d) {
    const std::size_t n = m.dim();
    if (d.rows() != n || d.cols() != n)
        throw DimensionMismatch("derivation matrix has wrong shape");
    const RationalMatrix g = m.metric_rational();
    return Rational(1, 2) * (d.transpose() * g + g * d);
}

/// Exact check of Ric = c g + (1/2)(D^T g + g D), the identity that turns an
/// algebraic Ricci soliton into a Ricci soliton.
inline bool verify_ricci_soliton_identity(const MetricLieAlgebra& m, const SolitonSolution& s) {
    const RationalMatrix ric = to_rational_matrix(ricci_tensor(m));
    const RationalMatrix expected = s.c * m.metric_rational() + lie_derivative_form(m, s.d);
    return ric == expected;
}

} // namespace metriclie
