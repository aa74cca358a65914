#pragma once

#include "darboux/polytope.hpp"
#include "darboux/rational.hpp"

#include <span>

namespace darboux::detail {

// Whether target is a convex combination of points: exact phase-one simplex
// on  sum_i l_i p_i = target, sum_i l_i = 1, l >= 0.
bool in_convex_hull(std::span<const LatticePoint> points, std::span<const Rational> target);

}  // namespace darboux::detail
