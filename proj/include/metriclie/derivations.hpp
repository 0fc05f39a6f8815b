#pragma once

#include <vector>

#include "metriclie/lie_algebra.hpp"

namespace metriclie {

/// Linear system M vec(D) = 0 cutting out Der(g), where vec stacks D by
/// columns (entry D(r,c) at index c*n + r). One row per (m, (i,j)) with
/// i < j, ordered with m outermost and pairs lexicographic:
///
///   sum_k C^k_ij D(m,k) - sum_r C^m_rj D(r,i) - sum_s C^m_is D(s,j) = 0
inline RationalMatrix derivation_constraint_matrix(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    const std::size_t pairs = n * (n - 1) / 2;
    RationalMatrix m(n * pairs, n * n);
    const auto vec_index = [n](std::size_t row, std::size_t col) { return col * n + row; };
    std::size_t out_row = 0;
    for (std::size_t comp = 0; comp < n; ++comp)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k)
                    m(out_row, vec_index(comp, k)) += a.c(i, j, k);
                for (std::size_t r = 0; r < n; ++r)
                    m(out_row, vec_index(r, i)) -= a.c(r, j, comp);
                for (std::size_t s = 0; s < n; ++s)
                    m(out_row, vec_index(s, j)) -= a.c(i, s, comp);
                ++out_row;
            }
    return m;
}

/// Basis of Der(g), read off the constraint-matrix nullspace; deterministic
/// (RREF order, first nonzero entry of each vec normalized to 1).
struct DerivationBasis {
    std::vector<RationalMatrix> basis;
    std::size_t dim = 0;
};

inline DerivationBasis derivation_basis(const LieAlgebra& a) {
    DerivationBasis out;
    for (const auto& v : nullspace(derivation_constraint_matrix(a)))
        out.basis.push_back(matrix_from_vec_column_major(a.dim(), v));
    out.dim = out.basis.size();
    return out;
}

/// Exact Leibniz check D[X,Y] = [DX,Y] + [X,DY] on all basis pairs.
inline bool is_derivation(const LieAlgebra& a, const RationalMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw DimensionMismatch("derivation candidate has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                Rational lhs = 0, rhs = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    lhs += a.c(i, j, k) * d(m, k);
                    rhs += d(k, i) * a.c(k, j, m) + d(k, j) * a.c(i, k, m);
                }
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

} // namespace metriclie
