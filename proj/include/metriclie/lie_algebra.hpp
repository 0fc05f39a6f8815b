#pragma once

#include <map>
#include <string>
#include <vector>

#include "metriclie/matrix.hpp"

namespace metriclie {

/// One bracket relation [e_i, e_j] = sum_k out[k] e_k, indices 0-based.
struct BracketTerm {
    std::size_t i = 0;
    std::size_t j = 0;
    std::map<std::size_t, Rational> out;
};

/// Antisymmetric structure constants C^k_ij of a bilinear bracket, prior to
/// Jacobi validation. c(i, j, k) is the e_k-coefficient of [e_i, e_j].
class StructureConstants {
public:
    explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return dim_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
        c_[(i * dim_ + j) * dim_ + k] = value;
        c_[(j * dim_ + i) * dim_ + k] = -value;
    }

    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimensionMismatch("bracket argument length mismatch");
        std::vector<Rational> out(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational& ck = c(i, j, k);
                    if (!ck.is_zero()) out[k] += f * ck;
                }
            }
        }
        return out;
    }

private:
    std::size_t dim_;
    std::vector<Rational> c_;
};

/// residual[i][j][k][m]: e_m-component of [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
/// All zero exactly when the input satisfies the Jacobi identity.
class JacobiResidual {
public:
    explicit JacobiResidual(std::size_t dim) : dim_(dim), r_(dim * dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return dim_; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t m) const {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + m];
    }
    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + m];
    }

    bool is_zero() const {
        for (const auto& x : r_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Rational> r_;
};

inline JacobiResidual jacobi_residual(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    JacobiResidual res(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational v = 0;
                    for (std::size_t p = 0; p < n; ++p) {
                        v += sc.c(j, k, p) * sc.c(i, p, m);
                        v += sc.c(k, i, p) * sc.c(j, p, m);
                        v += sc.c(i, j, p) * sc.c(k, p, m);
                    }
                    res.at(i, j, k, m) = v;
                }
    return res;
}

enum class StructureClass { abelian, nilpotent, solvable, non_solvable };

inline const char* to_string(StructureClass c) {
    switch (c) {
        case StructureClass::abelian: return "abelian";
        case StructureClass::nilpotent: return "nilpotent";
        case StructureClass::solvable: return "solvable";
        case StructureClass::non_solvable: return "non-solvable";
    }
    return "?";
}

/// Finite-dimensional Lie algebra given by validated structure constants.
class LieAlgebra {
public:
    static LieAlgebra make(std::size_t dim, const std::vector<BracketTerm>& brackets,
                           std::vector<std::string> basis_names = {}) {
        if (dim == 0) throw DimensionMismatch("Lie algebra must have positive dimension");
        StructureConstants sc(dim);
        std::map<std::pair<std::size_t, std::size_t>, bool> seen;
        for (const auto& b : brackets) {
            if (b.i >= dim || b.j >= dim)
                throw IndexOutOfRange("bracket index out of range");
            if (b.i == b.j) throw IndexOutOfRange("bracket [e_i, e_i] is identically zero");
            const auto key = std::minmax(b.i, b.j);
            if (seen[key]) throw IndexOutOfRange("duplicate bracket for one basis pair");
            seen[key] = true;
            for (const auto& [k, v] : b.out) {
                if (k >= dim) throw IndexOutOfRange("bracket output index out of range");
                sc.set(b.i, b.j, k, v);
            }
        }
        auto res = jacobi_residual(sc);
        if (!res.is_zero()) {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (std::size_t k = j + 1; k < dim; ++k)
                        for (std::size_t m = 0; m < dim; ++m)
                            if (!res.at(i, j, k, m).is_zero()) {
                                std::string vec = "(";
                                for (std::size_t q = 0; q < dim; ++q)
                                    vec += res.at(i, j, k, q).str() + (q + 1 < dim ? ", " : ")");
                                throw JacobiViolation(i, j, k, vec);
                            }
        }
        if (basis_names.empty())
            for (std::size_t i = 1; i <= dim; ++i) basis_names.push_back("e" + std::to_string(i));
        if (basis_names.size() != dim)
            throw DimensionMismatch("basis name count does not match dimension");
        return LieAlgebra(std::move(sc), std::move(basis_names));
    }

    std::size_t dim() const { return sc_.dim(); }
    const std::string& basis_name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const StructureConstants& structure() const { return sc_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_.c(i, j, k); }

    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
        return sc_.bracket(x, y);
    }

    /// Matrix of ad(e_i): column j holds [e_i, e_j].
    RationalMatrix ad(std::size_t i) const {
        RationalMatrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c(i, j, k);
        return m;
    }

    bool is_abelian() const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!c(i, j, k).is_zero()) return false;
        return true;
    }

    /// Center = kernel of x -> (ad x); returned as a nullspace basis.
    std::vector<std::vector<Rational>> center() const {
        const std::size_t n = dim();
        RationalMatrix m(n * n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = c(i, j, k);
        return nullspace(m);
    }

    StructureClass classify() const {
        if (is_abelian()) return StructureClass::abelian;
        if (series_reaches_zero(/*lower_central=*/true)) return StructureClass::nilpotent;
        if (series_reaches_zero(/*lower_central=*/false)) return StructureClass::solvable;
        return StructureClass::non_solvable;
    }

private:
    LieAlgebra(StructureConstants sc, std::vector<std::string> names)
        : sc_(std::move(sc)), names_(std::move(names)) {}

    // Span of pairwise brackets of two subspaces, as RREF rows.
    RationalMatrix bracket_span(const RationalMatrix& a, const RationalMatrix& b) const {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t s = 0; s < b.rows(); ++s) {
                std::vector<Rational> x(dim()), y(dim());
                for (std::size_t k = 0; k < dim(); ++k) {
                    x[k] = a(r, k);
                    y[k] = b(s, k);
                }
                auto z = bracket(x, y);
                bool zero = true;
                for (const auto& v : z) zero = zero && v.is_zero();
                if (!zero) rows.push_back(std::move(z));
            }
        RationalMatrix m(rows.size(), dim());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < dim(); ++k) m(r, k) = rows[r][k];
        auto [red, pivots] = rref(std::move(m));
        RationalMatrix span(pivots.size(), dim());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t k = 0; k < dim(); ++k) span(r, k) = red(r, k);
        return span;
    }

    bool series_reaches_zero(bool lower_central) const {
        const RationalMatrix full = RationalMatrix::identity(dim());
        RationalMatrix current = full;
        for (std::size_t step = 0; step <= dim() + 1; ++step) {
            RationalMatrix next = lower_central ? bracket_span(full, current)
                                                : bracket_span(current, current);
            if (next.rows() == 0) return true;
            if (next.rows() == current.rows()) return false; // stabilized above zero
            current = std::move(next);
        }
        return false;
    }

    StructureConstants sc_;
    std::vector<std::string> names_;
};

} // namespace metriclie
