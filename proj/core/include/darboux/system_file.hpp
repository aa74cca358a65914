#pragma once

#include "darboux/system.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace darboux {

/// Unreadable or invalid input: malformed JSON, schema violations, bad names,
/// expression parse errors. The message carries the origin and the field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a system file:
///
///     { "variables": ["x", "y"], "parameters": ["t"],
///       "derivation": ["x", "t*y"], "darboux_candidates": ["x", "y"] }
///
/// `parameters` and `darboux_candidates` are optional. `origin` prefixes
/// error messages (usually the file name).
System parse_system_file(std::string_view json_text, const std::string& origin);

/// Canonical system-file JSON for a system; candidates are emitted when present.
std::string system_file_json(const System& system);

}  // namespace darboux
