#pragma once

#include "darboux/field_scalar.hpp"
#include "darboux/monomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace darboux {

/// Sparse Laurent polynomial in X_1..X_n over Q(t_1..t_k).
///
/// Every stored monomial has exactly n entries and a nonzero coefficient.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, FieldScalar, GrlexLess>;

    /// The zero polynomial in n variables.
    explicit LaurentPoly(std::size_t n) : n_(n) {}

    static LaurentPoly constant(std::size_t n, const FieldScalar& c);
    /// X_{index+1}.
    static LaurentPoly variable(std::size_t n, std::size_t index);
    static LaurentPoly term(const Monomial& m, const FieldScalar& c);

    std::size_t num_variables() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// All exponents nonnegative.
    bool is_polynomial() const;
    /// Max total degree over the support; 0 for zero.
    long total_degree() const;
    /// Exponent vectors of the nonzero terms, in ascending grlex order.
    std::vector<Monomial> support() const;
    /// Coefficient of m (zero when absent).
    FieldScalar coefficient(const Monomial& m) const;

    /// Adds c * m in place. m must have n entries.
    void add_term(const Monomial& m, const FieldScalar& c);

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const FieldScalar& c, const LaurentPoly& f);
    LaurentPoly& operator+=(const LaurentPoly& g);
    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }

    /// Multiply by the monomial m.
    LaurentPoly shifted(const Monomial& m) const;
    /// Nonnegative integer power.
    LaurentPoly pow(unsigned e) const;

    /// Canonical text, highest grlex term first.
    std::string to_string(std::span<const std::string> variable_names,
                          std::span<const std::string> parameter_names) const;

private:
    void check_same_ring(const LaurentPoly& g) const;

    std::size_t n_;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };

/// Throws std::invalid_argument on variable-count mismatch.
LaurentPoly poly_arith(const LaurentPoly& f, const LaurentPoly& g, PolyOp op);

/// q with q * f == h, or nullopt when f does not divide h in the Laurent ring.
/// Throws std::domain_error when f is zero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& h, const LaurentPoly& f);

/// d f / d X_{index+1}. Throws std::out_of_range for a bad index.
LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t index);

/// Default variable names x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

}  // namespace darboux
