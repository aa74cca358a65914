#pragma once

#include "darboux/param_poly.hpp"
#include "darboux/rational.hpp"

#include <map>
#include <span>
#include <string>

namespace darboux {

/// Element of Q(t_1, ..., t_k): a reduced fraction of parameter polynomials.
///
/// Canonical form: gcd(num, den) = 1 and den monic, so equality is
/// structural. With no parameters this behaves exactly like Rational.
class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(long c) : num_(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    FieldScalar(const ParamPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    FieldScalar(const ParamPoly& num, const ParamPoly& den);

    static FieldScalar parameter(std::size_t index) { return ParamPoly::parameter(index); }

    const ParamPoly& numerator() const { return num_; }
    const ParamPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == ParamPoly(1) && num_ == ParamPoly(1); }
    /// No parameter occurs.
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_rational().
    Rational rational_value() const;

    FieldScalar operator-() const;
    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
    /// Throws std::domain_error on division by zero.
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
    FieldScalar& operator+=(const FieldScalar& b) { return *this = *this + b; }
    FieldScalar& operator-=(const FieldScalar& b) { return *this = *this - b; }
    FieldScalar& operator*=(const FieldScalar& b) { return *this = *this * b; }
    FieldScalar& operator/=(const FieldScalar& b) { return *this = *this / b; }
    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Multiplicative inverse; throws std::domain_error for zero.
    FieldScalar inverse() const;

    /// "p/q" for rationals; "(num)/(den)" or "(num)" style otherwise, always
    /// parseable back by the expression parser.
    std::string to_string(std::span<const std::string> parameter_names) const;

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_{Rational(1)};
};

enum class ScalarOp { add, mul, div };

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op);

/// Coefficients of a * common_den by parameter monomial.
/// Throws std::invalid_argument when a * common_den is not a polynomial.
std::map<Monomial, Rational, GrlexLess> param_components(const FieldScalar& a,
                                                         const ParamPoly& common_den);

}  // namespace darboux
