#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace darboux {

/// Exponent vector of a monomial. Entries may be negative (Laurent monomials).
///
/// Comparison treats absent trailing entries as zero, so monomials of
/// different stored lengths compare consistently. LaurentPoly keeps every
/// monomial at exactly n entries; ParamPoly trims trailing zeros.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<int> exps) : exps_(exps) {}

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
    int& at(std::size_t i) { return exps_.at(i); }
    std::span<const int> exponents() const { return exps_; }

    long total_degree() const;
    bool is_nonnegative() const;
    bool is_one() const;

    /// Exponent-wise a + b (the product of the monomials).
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exponent-wise a - b.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    /// True if b - a has no negative entry.
    friend bool divides(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b);

    /// Drop trailing zero entries.
    Monomial trimmed() const;
    /// Pad with zeros or truncate (caller guarantees truncated entries are zero).
    Monomial resized(std::size_t n) const;

private:
    std::vector<int> exps_;
};

/// Graded lexicographic order, ascending: total degree first, then the first
/// differing exponent decides (larger exponent of X_1 is larger).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace darboux
