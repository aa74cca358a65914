#include "darboux/field_scalar.hpp"

#include <stdexcept>

namespace darboux {

FieldScalar::FieldScalar(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("FieldScalar with zero denominator");
    normalize();
}

void FieldScalar::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        const ParamPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        const ParamPoly scale(Rational(1) / lc);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
}

Rational FieldScalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("FieldScalar::rational_value on a parametric value");
    return num_.constant_value() / den_.constant_value();
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    if (a.den_ == b.den_) {
        FieldScalar out;
        out.num_ = a.num_ + b.num_;
        out.den_ = a.den_;
        out.normalize();
        return out;
    }
    return FieldScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_ == ParamPoly(1) && b.den_ == ParamPoly(1)) {
        FieldScalar out;
        out.num_ = a.num_ * b.num_;
        return out;
    }
    return FieldScalar(a.num_ * b.num_, a.den_ * b.den_);
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return FieldScalar(den_, num_);
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * b.inverse();
}

FieldScalar scalar_arith(const FieldScalar& a, const FieldScalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    throw std::invalid_argument("unknown scalar operation");
}

namespace {

bool needs_parens(const ParamPoly& p) { return p.terms().size() > 1; }

}  // namespace

std::string FieldScalar::to_string(std::span<const std::string> parameter_names) const {
    std::string num = num_.to_string(parameter_names);
    if (den_ == ParamPoly(1)) return num;
    // A trailing exponent directly before "/" is rejected by the parser.
    if (needs_parens(num_) || num.find('^') != std::string::npos) num = "(" + num + ")";
    std::string den = den_.to_string(parameter_names);
    if (needs_parens(den_) || den.find('*') != std::string::npos) den = "(" + den + ")";
    return num + "/" + den;
}

std::map<Monomial, Rational, GrlexLess> param_components(const FieldScalar& a,
                                                         const ParamPoly& common_den) {
    if (common_den.is_zero()) throw std::invalid_argument("param_components: zero common denominator");
    const auto scaled = divide_exact(a.numerator() * common_den, a.denominator());
    if (!scaled) throw std::invalid_argument("param_components: denominator does not clear the value");
    return scaled->terms();
}

}  // namespace darboux
