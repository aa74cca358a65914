#include "darboux/param_poly.hpp"

#include "format_detail.hpp"

#include <algorithm>
#include <stdexcept>

namespace darboux {

ParamPoly::ParamPoly(const Rational& c) {
    if (!darboux::is_zero(c)) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::parameter(std::size_t index) {
    Monomial m(index + 1);
    m.at(index) = 1;
    return term(m, Rational(1));
}

ParamPoly ParamPoly::term(const Monomial& m, const Rational& c) {
    if (!m.is_nonnegative()) throw std::invalid_argument("parameter exponents must be nonnegative");
    ParamPoly p;
    p.add_term(m, c);
    return p;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (darboux::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m.trimmed(), c);
    if (!inserted) {
        it->second += c;
        if (darboux::is_zero(it->second)) terms_.erase(it);
    }
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("ParamPoly::constant_value on a nonconstant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t ParamPoly::num_parameters() const {
    std::size_t k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.size());
    return k;
}

long ParamPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

const Monomial& ParamPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero");
    return terms_.rbegin()->first;
}

const Rational& ParamPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
    return terms_.rbegin()->second;
}

int ParamPoly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

ParamPoly ParamPoly::coefficient_in(std::size_t var, int power) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        if (m[var] != power) continue;
        Monomial r = m.resized(std::max(m.size(), var + 1));
        r.at(var) = 0;
        out.add_term(r, c);
    }
    return out;
}

ParamPoly ParamPoly::monic() const {
    if (terms_.empty()) return {};
    const Rational lc = leading_coefficient();
    ParamPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / lc);
    return out;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a;
    out += b;
    return out;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a;
    out -= b;
    return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

std::string ParamPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string mono = detail::monomial_text(it->first, names);
        const Rational& c = it->second;
        std::string term;
        if (mono.empty())
            term = darboux::to_string(c);
        else if (c == 1)
            term = mono;
        else if (c == -1)
            term = "-" + mono;
        else
            term = darboux::to_string(c) + "*" + mono;
        detail::append_term(out, term);
    }
    return out;
}

std::optional<ParamPoly> divide_exact(const ParamPoly& h, const ParamPoly& f) {
    if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Monomial& lm = f.leading_monomial();
    const Rational lc = f.leading_coefficient();
    ParamPoly rest = h;
    ParamPoly quotient;
    // Single-divisor reduction: the remainder vanishes iff f divides h.
    while (!rest.is_zero()) {
        const Monomial& m = rest.leading_monomial();
        if (!divides(lm, m)) return std::nullopt;
        const ParamPoly t = ParamPoly::term(m / lm, rest.leading_coefficient() / lc);
        quotient += t;
        rest -= t * f;
    }
    return quotient;
}

namespace {

// Nonzero polynomials only involve t_1..t_v here.
ParamPoly gcd_in(const ParamPoly& a, const ParamPoly& b, std::size_t v);

ParamPoly content_in(const ParamPoly& p, std::size_t var, std::size_t v) {
    ParamPoly c;
    for (int j = p.degree_in(var); j >= 0; --j) {
        c = gcd_in(c, p.coefficient_in(var, j), v - 1);
        if (c == ParamPoly(1)) break;
    }
    return c;
}

ParamPoly exact_quotient(const ParamPoly& h, const ParamPoly& f) {
    auto q = divide_exact(h, f);
    if (!q) throw std::logic_error("gcd: inexact division in content removal");
    return *q;
}

// Sparse pseudo-remainder of a by b in `var`: lower degree in `var` than b,
// and a member of the ideal (a, b).
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, std::size_t var) {
    const int db = b.degree_in(var);
    const ParamPoly lb = b.coefficient_in(var, db);
    while (!a.is_zero()) {
        const int da = a.degree_in(var);
        if (da < db) break;
        const ParamPoly la = a.coefficient_in(var, da);
        Monomial shift(var + 1);
        shift.at(var) = da - db;
        a = lb * a - la * ParamPoly::term(shift, Rational(1)) * b;
    }
    return a;
}

ParamPoly gcd_in(const ParamPoly& a, const ParamPoly& b, std::size_t v) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (v == 0 || (a.is_constant() || b.is_constant())) return ParamPoly(1);
    const std::size_t var = v - 1;
    if (a.degree_in(var) == 0 && b.degree_in(var) == 0) return gcd_in(a, b, v - 1);

    const ParamPoly ca = content_in(a, var, v);
    const ParamPoly cb = content_in(b, var, v);
    const ParamPoly c = gcd_in(ca, cb, v - 1);
    ParamPoly p = exact_quotient(a, ca);
    ParamPoly q = exact_quotient(b, cb);
    if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);

    // Primitive remainder sequence; both members stay primitive in `var`.
    while (!q.is_zero()) {
        if (q.degree_in(var) == 0) {
            p = ParamPoly(1);
            break;
        }
        const ParamPoly r = pseudo_remainder(p, q, var);
        p = q;
        q = r.is_zero() ? r : exact_quotient(r, content_in(r, var, v));
    }
    return (c * p).monic();
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    return gcd_in(a, b, std::max(a.num_parameters(), b.num_parameters()));
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm of the zero polynomial");
    return exact_quotient(a * b, gcd(a, b)).monic();
}

std::vector<std::string> default_parameter_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < k; ++j) names.push_back("t" + std::to_string(j + 1));
    return names;
}

}  // namespace darboux
