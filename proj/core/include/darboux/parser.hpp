#pragma once

#include "darboux/laurent_poly.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux {

/// Malformed expression; column() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& message)
        : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Parses a polynomial expression over the given variable and parameter names.
///
/// Grammar (explicit `*` is required between factors):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := ('+' | '-') factor | atom ('^' ['-'] digits)?
///     atom   := digits | name | '(' expr ')'
///
/// A divisor must be a nonzero constant in the variables (so `5/2` and
/// `x/(t+1)` are fine, `1/x` is not). Negative exponents are accepted on
/// monomials with a rational coefficient only.
LaurentPoly parse_expression(std::string_view text, std::span<const std::string> variables,
                             std::span<const std::string> parameters);

/// True for names matching [A-Za-z][A-Za-z0-9_]*.
bool is_valid_name(std::string_view name);

}  // namespace darboux
