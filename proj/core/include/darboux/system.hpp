#pragma once

#include "darboux/derivation.hpp"
#include "darboux/laurent_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace darboux {

/// A derivation together with the names used to read and print it and,
/// when supplied, candidate Darboux polynomials.
struct System {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    Derivation derivation;
    std::optional<std::vector<LaurentPoly>> candidates;
};

}  // namespace darboux
