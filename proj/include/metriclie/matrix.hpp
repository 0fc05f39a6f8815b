#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "metriclie/param_scalar.hpp"

namespace metriclie {

/// Dense row-major matrix over an exact field scalar (Rational or ParamScalar).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    friend std::vector<T> operator*(const Matrix& m, const std::vector<T>& v) {
        if (m.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> r(m.rows_, T(0));
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

using RationalMatrix = Matrix<Rational>;
using ScalarMatrix = Matrix<ParamScalar>;

/// vec by columns: entry (r, c) lands at index c*rows + r.
template <typename T>
std::vector<T> vec_column_major(const Matrix<T>& m) {
    std::vector<T> v(m.rows() * m.cols(), T(0));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v[c * m.rows() + r] = m(r, c);
    return v;
}

template <typename T>
Matrix<T> matrix_from_vec_column_major(std::size_t n, const std::vector<T>& v) {
    if (v.size() != n * n) throw DimensionMismatch("vec length is not n^2");
    Matrix<T> m(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = v[c * n + r];
    return m;
}

/// Reduced row echelon form; pivot columns are strictly increasing.
template <typename T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
        const T inv = m(row, col).reciprocal();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).second.size();
}

/// Basis of the right nullspace, RREF-ordered, each vector scaled so its
/// first nonzero entry is 1. Empty when the nullspace is trivial.
template <typename T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        for (const auto& x : v) {
            if (!x.is_zero()) {
                const T inv = x.reciprocal();
                for (auto& y : v) y = inv * y;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
struct LinearSolve {
    std::optional<std::vector<T>> solution; // free variables set to 0
    bool unique = false;
};

/// Exact solve of a x = b; inconsistent systems yield an empty solution.
template <typename T>
LinearSolve<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return {std::nullopt, false};
    LinearSolve<T> out;
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
    out.solution = std::move(x);
    out.unique = pivots.size() == a.cols();
    return out;
}

template <typename T>
T det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    T d(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t pivot = col;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) return T(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(col, j), m(pivot, j));
            d = -d;
        }
        d *= m(col, col);
        const T inv = m(col, col).reciprocal();
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const T f = inv * m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto [r, pivots] = rref(std::move(aug));
    if (pivots.size() != n || pivots.back() != n - 1) throw SingularMatrix("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

template <typename T>
T trace(const Matrix<T>& m) {
    T t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline RationalMatrix to_rational_matrix(const ScalarMatrix& m) {
    return m.map([](const ParamScalar& s) { return s.as_rational(); });
}

inline ScalarMatrix to_scalar_matrix(const RationalMatrix& m) {
    return m.map([](const Rational& r) { return ParamScalar(r); });
}

inline RationalMatrix evaluate_matrix(const ScalarMatrix& m, const Rational& t) {
    return m.map([&](const ParamScalar& s) { return s.evaluate(t); });
}

} // namespace metriclie
