#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "metriclie/param_scalar.hpp"

namespace metriclie {

namespace detail {

/// Recursive-descent parser for the scalar-expression grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ['-'] atom ['^' nonneg-integer]
///   atom   := integer | parameter-name | '(' expr ')'
class ScalarParser {
public:
    ScalarParser(std::string_view text, std::optional<std::string> allowed_param)
        : text_(text), allowed_(std::move(allowed_param)) {}

    ParamScalar run() {
        ParamScalar value = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return value;
    }

private:
    ParamScalar expr() {
        ParamScalar value = term();
        for (;;) {
            skip_ws();
            if (accept('+')) value += term();
            else if (accept('-')) value -= term();
            else return value;
        }
    }

    ParamScalar term() {
        ParamScalar value = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) value *= factor();
            else if (accept('/')) value /= factor();
            else return value;
        }
    }

    ParamScalar factor() {
        skip_ws();
        bool negated = accept('-');
        ParamScalar value = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected nonnegative integer exponent", at);
            long long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 1'000'000) throw ParseError("exponent too large", at);
                ++pos_;
            }
            value = value.pow(e);
        }
        return negated ? -value : value;
    }

    ParamScalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ParamScalar value = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return ParamScalar(Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!allowed_ || name != *allowed_) throw UnknownParameterError(name, start);
            return ParamScalar::parameter(name);
        }
        throw ParseError("unexpected character", pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::optional<std::string> allowed_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a scalar expression into canonical form. Only `allowed_param` may
/// appear as an identifier; with no allowed parameter the result is a rational.
inline ParamScalar parse_scalar(std::string_view text,
                                std::optional<std::string> allowed_param = std::nullopt) {
    return detail::ScalarParser(text, std::move(allowed_param)).run();
}

} // namespace metriclie
