#pragma once

#include "darboux/monomial.hpp"
#include "darboux/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace darboux {

/// Polynomial in the parameters t_1..t_k with rational coefficients.
///
/// Monomials are stored trimmed of trailing zeros, so the parameter count is
/// implicit and constants mix freely with polynomials in any number of
/// parameters.
class ParamPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    /// The parameter t_{index+1}.
    static ParamPoly parameter(std::size_t index);
    static ParamPoly term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Requires is_constant().
    Rational constant_value() const;
    /// One more than the highest parameter index that occurs.
    std::size_t num_parameters() const;
    long total_degree() const;

    /// Grlex-largest monomial and its coefficient. Requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// Degree in parameter `var` (0 for the zero polynomial).
    int degree_in(std::size_t var) const;
    /// Coefficient of t_var^power, as a polynomial free of t_var.
    ParamPoly coefficient_in(std::size_t var, int power) const;

    /// Divide by the leading coefficient.
    ParamPoly monic() const;

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator+=(const ParamPoly& b);
    ParamPoly& operator-=(const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    /// Add c * m to this polynomial.
    void add_term(const Monomial& m, const Rational& c);

    /// Canonical text, highest grlex term first; `names[j]` names t_{j+1}.
    std::string to_string(std::span<const std::string> names) const;

private:
    TermMap terms_;
};

/// Quotient q with q * f == h, or nullopt when f does not divide h.
/// Throws std::domain_error when f is zero.
std::optional<ParamPoly> divide_exact(const ParamPoly& h, const ParamPoly& f);

/// Monic greatest common divisor over Q[t_1..t_k]; gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Monic least common multiple; both arguments must be nonzero.
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

/// Default parameter names t1..tk.
std::vector<std::string> default_parameter_names(std::size_t k);

}  // namespace darboux
