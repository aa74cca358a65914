#include "darboux/monomial.hpp"

#include <algorithm>

namespace darboux {

long Monomial::total_degree() const {
    long d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Monomial(std::move(out));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool operator==(const Monomial& a, const Monomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Monomial Monomial::trimmed() const {
    std::size_t n = exps_.size();
    while (n > 0 && exps_[n - 1] == 0) --n;
    return Monomial(std::vector<int>(exps_.begin(), exps_.begin() + static_cast<long>(n)));
}

Monomial Monomial::resized(std::size_t n) const {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
    return Monomial(std::move(out));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const long da = a.total_degree();
    const long db = b.total_degree();
    if (da != db) return da < db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace darboux
