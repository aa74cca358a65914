#pragma once

#include "darboux/polytope.hpp"

#include <stdexcept>
#include <string>

namespace darboux {

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lattice units per SVG unit step.
inline constexpr int kSvgScale = 32;

/// Standalone SVG of a nonempty planar polytope: axes through the origin,
/// the boundary as a closed counterclockwise path from the lexicographic
/// minimum (y pointing up), and with `lattice_overlay` one filled circle per
/// point of P in the nonnegative quadrant. Byte-deterministic.
///
/// Throws UnsupportedDimension unless n == 2, std::invalid_argument when P is empty.
std::string emit_svg(const IntPolytope& p, bool lattice_overlay);

}  // namespace darboux
