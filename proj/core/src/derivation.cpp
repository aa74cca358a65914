#include "darboux/derivation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace darboux {

Derivation::Derivation(std::vector<LaurentPoly> components) : components_(std::move(components)) {
    const std::size_t n = components_.size();
    if (n == 0) throw std::invalid_argument("derivation needs at least one component");
    bool any_nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPoly& a = components_[i];
        if (a.num_variables() != n)
            throw std::invalid_argument("derivation component " + std::to_string(i + 1) + " has " +
                                        std::to_string(a.num_variables()) + " variables, expected " +
                                        std::to_string(n));
        if (!a.is_polynomial())
            throw std::invalid_argument("derivation component " + std::to_string(i + 1) +
                                        " has a negative exponent");
        any_nonzero = any_nonzero || !a.is_zero();
    }
    if (!any_nonzero) throw std::invalid_argument("derivation has all components zero");
}

long Derivation::degree() const {
    long d = 0;
    for (const auto& a : components_)
        if (!a.is_zero()) d = std::max(d, a.total_degree());
    return d;
}

LaurentPoly apply(const Derivation& d, const LaurentPoly& f) {
    const std::size_t n = d.num_variables();
    if (f.num_variables() != n)
        throw std::invalid_argument("apply: polynomial has " + std::to_string(f.num_variables()) +
                                    " variables, derivation has " + std::to_string(n));
    LaurentPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (d.component(i).is_zero()) continue;
        const LaurentPoly di = partial_derivative(f, i);
        if (!di.is_zero()) out += d.component(i) * di;
    }
    return out;
}

IntPolytope support_polytope(const Derivation& d) {
    const std::size_t n = d.num_variables();
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [m, c] : d.component(i).terms()) {
            LatticePoint x(n);
            for (std::size_t j = 0; j < n; ++j) x[j] = m[j];
            x[i] -= 1;
            pts.push_back(std::move(x));
        }
    }
    return convex_hull(n, pts);
}

std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom) {
    if (bottom > top) return 0;
    bottom = std::min(bottom, top - bottom);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= bottom; ++i) {
        // r * (top - bottom + i) is divisible by i at every step.
        const std::uint64_t factor = top - bottom + i;
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t rr = r / g;
        const std::uint64_t ff = factor / (i / g);
        if (rr != 0 && ff > std::numeric_limits<std::uint64_t>::max() / rr)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        r = rr * ff;
    }
    return r;
}

BoundsReport bounds_report(const Derivation& d) {
    BoundsReport r;
    r.n = d.num_variables();
    r.polytope = support_polytope(d);
    r.lattice_points = lattice_points_nonneg(r.polytope);
    r.sparse_bound = r.lattice_points.size();
    r.sparse_darboux = r.sparse_bound + 1;
    r.sparse_jouanolou = r.sparse_bound + r.n;
    r.dense_degree = d.degree();
    const auto d_plus = static_cast<std::uint64_t>(r.dense_degree);
    r.dense_bound = binomial(r.n + d_plus - 1, r.n);
    r.dense_darboux = r.dense_bound + 1;
    r.dense_jouanolou = r.dense_bound + r.n;
    return r;
}

}  // namespace darboux
