#pragma once

#include "darboux/derivation.hpp"
#include "darboux/laurent_poly.hpp"
#include "darboux/rational.hpp"
#include "darboux/system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace darboux {

/// Every monomial of total degree <= d in every A_i, with positive rational
/// coefficients drawn from a stream seeded by `seed`.
System gen_dense(std::size_t n, int d, std::uint64_t seed);

/// n = 2, A_1 = A_2 = X^e Y^e + 2 X^(e-1) Y^e + 3 X^e Y^(e-1) + 5.
System gen_figure_family(int e);

/// D = p(X_1) d/dX_1 + t_2 X_2 d/dX_2 + ... + t_n X_n d/dX_n with
/// p = prod_j (X_1 - r_j). Candidates are the linear factors of p
/// followed by X_2..X_n. Throws std::invalid_argument on repeated roots,
/// an empty root list, or n < 2.
System gen_optimality_family(const std::vector<Rational>& roots, std::size_t n);

/// X_1 d/dX_1 + ... + X_n d/dX_n with candidates X_1..X_n.
System gen_euler(std::size_t n);

}  // namespace darboux
