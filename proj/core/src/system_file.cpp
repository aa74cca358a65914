#include "darboux/system_file.hpp"

#include "darboux/parser.hpp"
#include "json_detail.hpp"

#include <set>

namespace darboux {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> string_list(const nlohmann::json& doc, const char* key, const std::string& origin,
                                     bool required) {
    if (!doc.contains(key)) {
        if (required) throw InputError(origin + ": missing field '" + key + "'");
        return {};
    }
    const auto& v = doc.at(key);
    if (!v.is_array()) throw InputError(origin + ": field '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string())
            throw InputError(origin + ": " + key + "[" + std::to_string(i) + "] must be a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

LaurentPoly parse_field(const std::string& text, const std::string& where, const System& names) {
    try {
        return parse_expression(text, names.variables, names.parameters);
    } catch (const ParseError& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

System parse_system_file(std::string_view json_text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(origin + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object()) throw InputError(origin + ": top level must be a JSON object");
    static const std::set<std::string> known{"variables", "parameters", "derivation",
                                             "darboux_candidates"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw InputError(origin + ": unknown field '" + key + "'");

    const auto variables = string_list(doc, "variables", origin, true);
    const auto parameters = string_list(doc, "parameters", origin, false);
    const auto derivation = string_list(doc, "derivation", origin, true);
    if (variables.empty()) throw InputError(origin + ": at least one variable is required");
    if (derivation.size() != variables.size())
        throw InputError(origin + ": derivation has " + std::to_string(derivation.size()) +
                         " components for " + std::to_string(variables.size()) + " variables");

    std::set<std::string> seen;
    for (const auto& list : {variables, parameters}) {
        for (const auto& name : list) {
            if (!is_valid_name(name)) throw InputError(origin + ": invalid name '" + name + "'");
            if (!seen.insert(name).second) throw InputError(origin + ": duplicate name '" + name + "'");
        }
    }

    // Derivation needs its components up front; the placeholder is replaced below.
    System sys{variables, parameters, Derivation({LaurentPoly::constant(1, FieldScalar(1))}), std::nullopt};
    std::vector<LaurentPoly> comps;
    for (std::size_t i = 0; i < derivation.size(); ++i) {
        LaurentPoly a = parse_field(derivation[i], origin + ": derivation[" + std::to_string(i) + "]", sys);
        if (!a.is_polynomial())
            throw InputError(origin + ": derivation[" + std::to_string(i) + "]: negative exponent in a component");
        comps.push_back(std::move(a));
    }
    try {
        sys.derivation = Derivation(std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw InputError(origin + ": " + e.what());
    }

    if (doc.contains("darboux_candidates")) {
        const auto texts = string_list(doc, "darboux_candidates", origin, false);
        std::vector<LaurentPoly> cands;
        for (std::size_t i = 0; i < texts.size(); ++i)
            cands.push_back(
                parse_field(texts[i], origin + ": darboux_candidates[" + std::to_string(i) + "]", sys));
        sys.candidates = std::move(cands);
    }
    return sys;
}

std::string system_file_json(const System& system) {
    return detail::system_object(system).dump(2) + "\n";
}

}  // namespace darboux
