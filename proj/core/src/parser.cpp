#include "darboux/parser.hpp"

#include <algorithm>
#include <cctype>

namespace darboux {

namespace {

constexpr long kMaxExponent = 10000;

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> variables,
           std::span<const std::string> parameters)
        : text_(text), variables_(variables), parameters_(parameters) {}

    LaurentPoly parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        LaurentPoly result = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(pos + 1, message);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::size_t n() const { return variables_.size(); }

    LaurentPoly expr() {
        LaurentPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                const LaurentPoly divisor = factor();
                if (divisor.is_zero()) fail_at(at, "division by zero");
                if (!divisor.is_constant()) fail_at(at, "divisor must not involve variables");
                acc = divisor.terms().begin()->second.inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    LaurentPoly factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        skip_space();
        const std::size_t base_at = pos_;
        LaurentPoly base = atom();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        const std::size_t exp_at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be an integer literal");
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (peek() - '0');
            if (e > kMaxExponent) fail_at(exp_at, "exponent too large");
            ++pos_;
        }
        if (peek() == '.' || peek() == '/') fail_at(exp_at, "exponent must be an integer");
        if (!negative) return base.pow(static_cast<unsigned>(e));
        return negative_power(base, e, base_at);
    }

    LaurentPoly negative_power(const LaurentPoly& base, long e, std::size_t at) const {
        if (base.is_zero()) fail_at(at, "zero raised to a negative power");
        if (base.terms().size() != 1) fail_at(at, "negative exponent needs a monomial base");
        const auto& [m, c] = *base.terms().begin();
        if (!c.is_rational()) fail_at(at, "negative exponent on a parameter");
        Monomial inv(n());
        for (std::size_t i = 0; i < n(); ++i) inv.at(i) = -m[i] * static_cast<int>(e);
        FieldScalar ci(1);
        const FieldScalar cinv = c.inverse();
        for (long k = 0; k < e; ++k) ci = ci * cinv;
        return LaurentPoly::term(inv, ci);
    }

    LaurentPoly atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        if (at_end()) fail("unexpected end of expression");
        fail(std::string("unexpected '") + c + "'");
    }

    LaurentPoly number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '.' || peek() == 'e' || peek() == 'E')
            fail_at(start, "malformed rational literal (use p/q)");
        const Integer value(std::string(text_.substr(start, pos_ - start)), 10);
        return LaurentPoly::constant(n(), FieldScalar(Rational(value)));
    }

    LaurentPoly name() {
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        const std::string_view id = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < variables_.size(); ++i)
            if (variables_[i] == id) return LaurentPoly::variable(n(), i);
        for (std::size_t j = 0; j < parameters_.size(); ++j)
            if (parameters_[j] == id) return LaurentPoly::constant(n(), FieldScalar::parameter(j));
        fail_at(start, "unknown name '" + std::string(id) + "'");
    }

    std::string_view text_;
    std::span<const std::string> variables_;
    std::span<const std::string> parameters_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_expression(std::string_view text, std::span<const std::string> variables,
                             std::span<const std::string> parameters) {
    return Parser(text, variables, parameters).parse();
}

bool is_valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace darboux
