#pragma once

#include "darboux/laurent_poly.hpp"
#include "darboux/polytope.hpp"

#include <cstdint>
#include <vector>

namespace darboux {

/// D = sum_i A_i d/dX_i with polynomial A_i.
class Derivation {
public:
    /// Throws std::invalid_argument when the list is empty, the A_i disagree
    /// on n or n != size, some A_i has a negative exponent, or all A_i are zero.
    explicit Derivation(std::vector<LaurentPoly> components);

    std::size_t num_variables() const { return components_.size(); }
    const std::vector<LaurentPoly>& components() const { return components_; }
    const LaurentPoly& component(std::size_t i) const { return components_.at(i); }

    /// max_i deg A_i (total degree).
    long degree() const;

private:
    std::vector<LaurentPoly> components_;
};

/// D(f) = sum_i A_i * d f / d X_i.
LaurentPoly apply(const Derivation& d, const LaurentPoly& f);

/// N_D, the Newton polytope of a generic combination sum_i x_i A_i / X_i,
/// built as the hull of the union of N(A_i) - e_i over the nonzero A_i.
IntPolytope support_polytope(const Derivation& d);

struct BoundsReport {
    std::size_t n = 0;
    std::uint64_t sparse_bound = 0;  // B
    std::uint64_t sparse_darboux = 0;
    std::uint64_t sparse_jouanolou = 0;
    long dense_degree = 0;
    std::uint64_t dense_bound = 0;  // binom(n + d - 1, n)
    std::uint64_t dense_darboux = 0;
    std::uint64_t dense_jouanolou = 0;
    std::vector<LatticePoint> lattice_points;
    IntPolytope polytope{0};
};

BoundsReport bounds_report(const Derivation& d);

/// binom(top, bottom) with overflow checking; 0 when bottom > top.
std::uint64_t binomial(std::uint64_t top, std::uint64_t bottom);

}  // namespace darboux
