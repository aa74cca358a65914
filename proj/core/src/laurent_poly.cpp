#include "darboux/laurent_poly.hpp"

#include "format_detail.hpp"

#include <algorithm>
#include <stdexcept>

namespace darboux {

LaurentPoly LaurentPoly::constant(std::size_t n, const FieldScalar& c) {
    LaurentPoly p(n);
    p.add_term(Monomial(n), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t index) {
    if (index >= n) throw std::out_of_range("variable index out of range");
    Monomial m(n);
    m.at(index) = 1;
    return term(m, FieldScalar(1));
}

LaurentPoly LaurentPoly::term(const Monomial& m, const FieldScalar& c) {
    LaurentPoly p(m.size());
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_nonnegative(); });
}

long LaurentPoly::total_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m.total_degree() : std::max(d, m.total_degree());
        first = false;
    }
    return d;
}

std::vector<Monomial> LaurentPoly::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

FieldScalar LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldScalar() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const FieldScalar& c) {
    if (m.size() != n_) throw std::invalid_argument("monomial length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_same_ring(const LaurentPoly& g) const {
    if (n_ != g.n_)
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(g.n_));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    check_same_ring(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly out = f;
    out += g;
    return out;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return f + (-g); }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    f.check_same_ring(g);
    LaurentPoly out(f.n_);
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, cf * cg);
    return out;
}

LaurentPoly operator*(const FieldScalar& c, const LaurentPoly& f) {
    LaurentPoly out(f.n_);
    if (c.is_zero()) return out;
    for (const auto& [m, fc] : f.terms_) out.terms_.emplace(m, c * fc);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Monomial& s) const {
    LaurentPoly out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace((m * s).resized(n_), c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(n_, FieldScalar(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string LaurentPoly::to_string(std::span<const std::string> variable_names,
                                   std::span<const std::string> parameter_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string mono = detail::monomial_text(it->first, variable_names);
        const FieldScalar& c = it->second;
        std::string coeff = c.to_string(parameter_names);
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else {
            if (c.numerator().terms().size() > 1 && c.denominator() == ParamPoly(1))
                coeff = "(" + coeff + ")";
            term = coeff + "*" + mono;
        }
        detail::append_term(out, term);
    }
    return out;
}

LaurentPoly poly_arith(const LaurentPoly& f, const LaurentPoly& g, PolyOp op) {
    if (f.num_variables() != g.num_variables())
        throw std::invalid_argument("poly_arith: variable-count mismatch");
    switch (op) {
        case PolyOp::add: return f + g;
        case PolyOp::sub: return f - g;
        case PolyOp::mul: return f * g;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

namespace {

// Componentwise minimum exponent over the support.
Monomial min_exponents(const LaurentPoly& f) {
    const std::size_t n = f.num_variables();
    Monomial lo(n);
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < n; ++i) lo.at(i) = first ? m[i] : std::min(lo[i], m[i]);
        first = false;
    }
    return lo;
}

Monomial negated(const Monomial& m) { return Monomial(m.size()) / m; }

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& h, const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
    if (h.num_variables() != f.num_variables())
        throw std::invalid_argument("exact_divide: variable-count mismatch");
    const std::size_t n = f.num_variables();
    if (h.is_zero()) return LaurentPoly(n);

    // Strip monomial content: f has no X_i factor afterwards, so divisibility
    // in the Laurent ring reduces to divisibility of polynomials.
    const Monomial f_lo = min_exponents(f);
    const Monomial h_lo = min_exponents(h);
    const LaurentPoly fp = f.shifted(negated(f_lo));
    LaurentPoly rest = h.shifted(negated(h_lo));

    const Monomial lm = fp.terms().rbegin()->first;
    const FieldScalar lc = fp.terms().rbegin()->second;
    LaurentPoly quotient(n);
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms().rbegin();
        if (!divides(lm, m)) return std::nullopt;
        const LaurentPoly t = LaurentPoly::term((m / lm).resized(n), c / lc);
        quotient += t;
        rest = rest - t * fp;
    }
    return quotient.shifted((h_lo / f_lo).resized(n));
}

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t index) {
    const std::size_t n = f.num_variables();
    if (index >= n) throw std::out_of_range("partial_derivative: variable index out of range");
    LaurentPoly out(n);
    for (const auto& [m, c] : f.terms()) {
        const int e = m[index];
        if (e == 0) continue;
        Monomial d = m;
        d.at(index) = e - 1;
        out.add_term(d, FieldScalar(static_cast<long>(e)) * c);
    }
    return out;
}

std::vector<std::string> default_variable_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace darboux
