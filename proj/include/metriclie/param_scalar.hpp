#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "metriclie/polynomial.hpp"

namespace metriclie {

/// Exact scalar: a rational number, or a rational function of one named parameter.
///
/// Canonical form: numerator and denominator coprime, denominator monic, and the
/// parameter name dropped as soon as the value is constant. Equal values therefore
/// have identical representations, and a constant ParamScalar compares equal to
/// the corresponding Rational.
class ParamScalar {
public:
    ParamScalar() : den_(1) {}
    ParamScalar(const Rational& value) : num_(value), den_(1) {} // NOLINT: implicit by design
    ParamScalar(long long value) : ParamScalar(Rational(value)) {}

    static ParamScalar parameter(const std::string& name) {
        return ParamScalar(Polynomial::variable(), Polynomial(1), name);
    }

    ParamScalar(Polynomial num, Polynomial den, std::optional<std::string> param)
        : num_(std::move(num)), den_(std::move(den)), param_(std::move(param)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if ((!num_.is_constant() || !den_.is_constant()) && !param_)
            throw Error("non-constant scalar needs a parameter name");
        canonicalize();
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return !param_.has_value(); }
    const std::optional<std::string>& parameter_name() const { return param_; }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    /// The underlying rational; throws ParameterizedValue for genuine functions.
    Rational as_rational() const {
        if (!is_constant())
            throw ParameterizedValue("scalar depends on parameter '" + *param_ + "'");
        return num_.constant_term();
    }

    ParamScalar operator-() const { return ParamScalar(-num_, den_, param_); }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
        auto p = merged_param(a, b);
        return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, std::move(p));
    }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        auto p = merged_param(a, b);
        return ParamScalar(a.num_ * b.num_, a.den_ * b.den_, std::move(p));
    }
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        auto p = merged_param(a, b);
        return ParamScalar(a.num_ * b.den_, a.den_ * b.num_, std::move(p));
    }

    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

    ParamScalar reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of zero");
        return ParamScalar(den_, num_, param_);
    }

    ParamScalar pow(long long e) const {
        if (e < 0) return reciprocal().pow(-e);
        ParamScalar base = *this, acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational evaluate(const Rational& t) const {
        if (is_constant()) return num_.constant_term();
        const Rational d = den_.evaluate(t);
        if (d.is_zero())
            throw EvaluationError("denominator vanishes at " + *param_ + " = " + t.str());
        return num_.evaluate(t) / d;
    }

    std::string str() const {
        if (is_constant()) return as_rational().str();
        const std::string name = *param_;
        if (den_.is_one()) return num_.str(name);
        return "(" + num_.str(name) + ")/(" + den_.str(name) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.str(); }

private:
    static std::optional<std::string> merged_param(const ParamScalar& a, const ParamScalar& b) {
        if (a.param_ && b.param_ && *a.param_ != *b.param_)
            throw MixedParameters(*a.param_, *b.param_);
        return a.param_ ? a.param_ : b.param_;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            param_.reset();
            return;
        }
        const Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0 || !g.leading_coefficient().is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const Rational lead = den_.leading_coefficient();
        if (!lead.is_one()) {
            const Rational inv = lead.reciprocal();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        if (num_.is_constant() && den_.is_one()) param_.reset();
    }

    Polynomial num_;
    Polynomial den_;
    std::optional<std::string> param_;
};

} // namespace metriclie
