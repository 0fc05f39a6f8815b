#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "metriclie/rational.hpp"

namespace metriclie {

/// Dense univariate polynomial over Rational.
///
/// Coefficients are stored by ascending degree; the vector is empty exactly
/// for the zero polynomial and otherwise ends in a nonzero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) { // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Polynomial(long long constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable() { return from_coefficients({Rational(0), Rational(1)}); }

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// Degree, with the convention deg 0 = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading_coefficient() const { return c_.back(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational constant_term() const { return coefficient(0); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
        return from_coefficients(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return from_coefficients(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return from_coefficients(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; the divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Polynomial rem = a;
        std::vector<Rational> q(a.c_.size() > b.c_.size() - 1 ? a.c_.size() - b.c_.size() + 1 : 0,
                                Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            Rational f = rem.leading_coefficient() / b.leading_coefficient();
            q[shift] = f;
            std::vector<Rational> sub(shift, Rational(0));
            sub.insert(sub.end(), b.c_.begin(), b.c_.end());
            Polynomial s = from_coefficients(std::move(sub));
            rem = rem - s * f;
        }
        return {from_coefficients(std::move(q)), rem};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * leading_coefficient().reciprocal();
    }

    Rational evaluate(const Rational& t) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    double evaluate_double(double t) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
        return acc;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = r.monic(); // keeps coefficient growth in check
        }
        return a.monic();
    }

    /// Renders in the scalar-expression grammar with explicit '*', e.g. "2*h^2 - 1/3*h + 4".
    std::string str(const std::string& name) const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational c = coefficient(static_cast<std::size_t>(k));
            if (c.is_zero()) continue;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            const Rational mag = c.abs();
            if (k == 0) {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += name;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<BigInt> divisors{BigInt(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divisors.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

/// Deflates p by the exact linear factor (x - r); p(r) must be zero.
inline Polynomial deflate(const Polynomial& p, const Rational& r) {
    std::vector<Rational> q(static_cast<std::size_t>(p.degree()), Rational(0));
    Rational carry = 0;
    for (int k = p.degree(); k >= 1; --k) {
        carry = p.coefficient(static_cast<std::size_t>(k)) + carry * r;
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    return Polynomial::from_coefficients(std::move(q));
}

} // namespace detail

/// All rational roots of p with multiplicity, in increasing order.
///
/// Works on the primitive integer form of p and tests the usual candidates
/// p/q with p | constant term and q | leading coefficient.
inline std::vector<Rational> rational_roots(Polynomial p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    while (p.degree() >= 1 && p.constant_term().is_zero()) {
        roots.emplace_back(0);
        p = detail::deflate(p, Rational(0));
    }
    if (p.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // Clear denominators to get integer coefficients.
    BigInt den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.denominator());
    std::vector<BigInt> ic;
    ic.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) ic.push_back(c.numerator() * (den_lcm / c.denominator()));
    BigInt content = 0;
    for (const auto& c : ic) content = gcd(content, c);
    for (auto& c : ic) c /= content;

    const std::vector<BigInt> ps = detail::positive_divisors(ic.front());
    const std::vector<BigInt> qs = detail::positive_divisors(ic.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps)
        for (const auto& b : qs) {
            candidates.emplace_back(a, b);
            candidates.emplace_back(-a, b);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
        while (p.degree() >= 1 && p.evaluate(r).is_zero()) {
            roots.push_back(r);
            p = detail::deflate(p, r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace metriclie
