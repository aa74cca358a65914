#pragma once

#include "darboux/monomial.hpp"

#include <span>
#include <string>

namespace darboux::detail {

// "x^2*y^-1"; empty for the unit monomial.
inline std::string monomial_text(const Monomial& m, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const int e = m[i];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "?";
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

// Appends a signed term, turning a leading '-' into a binary minus.
inline void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term.front() == '-') {
        out += " - ";
        out.append(term, 1, std::string::npos);
    } else {
        out += " + ";
        out += term;
    }
}

}  // namespace darboux::detail
