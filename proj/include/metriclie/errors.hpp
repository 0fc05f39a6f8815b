#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metriclie {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; `offset` is the byte position where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

/// An identifier appeared in an expression where it is not an allowed parameter.
class UnknownParameterError : public ParseError {
public:
    UnknownParameterError(const std::string& name, std::size_t offset)
        : ParseError("unknown parameter '" + name + "'", offset), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& message) : Error(message) {}
};

/// A rational function was evaluated at a point where its denominator vanishes.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Two scalars carrying different parameter names were combined.
class MixedParameters : public Error {
public:
    MixedParameters(const std::string& a, const std::string& b)
        : Error("cannot combine scalars in different parameters '" + a + "' and '" + b + "'") {}
};

/// A parameter-dependent value reached an operation that requires plain rationals.
class ParameterizedValue : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Structure constants fail the Jacobi identity; reports one offending triple.
class JacobiViolation : public Error {
public:
    JacobiViolation(std::size_t i, std::size_t j, std::size_t k, const std::string& residual)
        : Error("Jacobi identity fails on basis triple (" + std::to_string(i + 1) + ", " +
                std::to_string(j + 1) + ", " + std::to_string(k + 1) + "); residual " + residual),
          i_(i), j_(j), k_(k) {}

    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    std::size_t k() const { return k_; }

private:
    std::size_t i_, j_, k_;
};

class NotSymmetric : public Error {
public:
    using Error::Error;
};

class DegenerateMetric : public Error {
public:
    using Error::Error;
};

class NotADerivation : public Error {
public:
    using Error::Error;
};

/// The metric determinant dropped below the abort threshold during a flow.
class FlowDegenerate : public Error {
public:
    explicit FlowDegenerate(double time)
        : Error("metric became near-degenerate at t = " + std::to_string(time)), time_(time) {}

    double time() const { return time_; }

private:
    double time_ = 0.0;
};

/// Schema or content problem in an input document; `location` points into the file.
class InputError : public Error {
public:
    InputError(const std::string& location, const std::string& message)
        : Error(location + ": " + message), location_(location) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

} // namespace metriclie
