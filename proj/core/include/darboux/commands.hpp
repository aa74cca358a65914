#pragma once

#include "darboux/rational.hpp"
#include "darboux/system.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace darboux {

/// Process exit codes; every command ends with exactly one of these.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,               // bad command line
    kExitInput = 2,               // unreadable file, malformed JSON or expression
    kExitNoCandidates = 3,        // certify without darboux_candidates
    kExitVerificationFailed = 4,  // a built certificate did not verify
    kExitInternalDefect = 5,      // a theorem-level invariant failed
    kExitUnsupported = 6,         // e.g. SVG requested for n != 2
};

struct CommandOutput {
    int exit_code = kExitOk;
    std::string json;   // report, empty on error
    std::string svg;    // bounds with SVG requested
    std::string error;  // one-line message on error
};

/// Bounds report for the system; with `with_svg` also renders N_D (n = 2 only).
CommandOutput run_bounds(const System& system, bool with_svg);

/// Classifies the candidates, emits both relation spaces and builds and
/// verifies the Darboux and rational first-integral certificates.
CommandOutput run_certify(const System& system);

/// Cofactor of one candidate expression, parsed with the system's names.
CommandOutput run_cofactor(const System& system, std::string_view candidate);

struct CorpusRequest {
    std::string family;  // dense | figure-e | optimality | euler
    std::size_t n = 2;
    int d = 2;
    std::uint64_t seed = 1;
    int e = 3;
    std::vector<Rational> roots{Rational(0), Rational(1), Rational(2)};
};

/// A system file for the requested family.
CommandOutput run_corpus(const CorpusRequest& request);

/// Parses "0,1,-1/2" into rationals; throws std::invalid_argument.
std::vector<Rational> parse_root_list(std::string_view text);

}  // namespace darboux
