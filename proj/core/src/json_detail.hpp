#pragma once

#include "darboux/derivation.hpp"
#include "darboux/engine.hpp"
#include "darboux/system.hpp"

#include <json.hpp>

namespace darboux::detail {

inline std::string text(const System& s, const LaurentPoly& f) {
    return f.to_string(s.variables, s.parameters);
}

inline std::string text(const System& s, const FieldScalar& c) { return c.to_string(s.parameters); }

inline nlohmann::ordered_json points_array(const std::vector<LatticePoint>& pts) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

inline nlohmann::ordered_json system_object(const System& s) {
    nlohmann::ordered_json out;
    out["variables"] = s.variables;
    out["parameters"] = s.parameters;
    auto derivation = nlohmann::ordered_json::array();
    for (const auto& a : s.derivation.components()) derivation.push_back(text(s, a));
    out["derivation"] = std::move(derivation);
    if (s.candidates) {
        auto cands = nlohmann::ordered_json::array();
        for (const auto& f : *s.candidates) cands.push_back(text(s, f));
        out["darboux_candidates"] = std::move(cands);
    }
    return out;
}

inline nlohmann::ordered_json bounds_object(const BoundsReport& r) {
    nlohmann::ordered_json out;
    out["n"] = r.n;
    out["B"] = r.sparse_bound;
    out["sparse_darboux"] = r.sparse_darboux;
    out["sparse_jouanolou"] = r.sparse_jouanolou;
    out["dense_degree"] = r.dense_degree;
    out["dense_binomial"] = r.dense_bound;
    out["dense_darboux"] = r.dense_darboux;
    out["dense_jouanolou"] = r.dense_jouanolou;
    out["support_polytope"] = points_array(r.polytope.vertices());
    out["lattice_points"] = points_array(r.lattice_points);
    return out;
}

inline nlohmann::ordered_json relation_object(const System& s, const RelationSpace& space) {
    nlohmann::ordered_json out;
    out["field"] = space.field == RelationField::over_K ? "K" : "Q";
    out["dimension"] = space.dimension();
    auto basis = nlohmann::ordered_json::array();
    for (const auto& v : space.basis) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : v) row.push_back(text(s, x));
        basis.push_back(std::move(row));
    }
    out["basis"] = std::move(basis);
    return out;
}

inline nlohmann::ordered_json integer_value(const Integer& k) {
    if (k.fits_slong_p()) return k.get_si();
    return k.get_str();
}

inline nlohmann::ordered_json certificate_object(const System& s, const Certificate& c,
                                                 const Verification& v) {
    nlohmann::ordered_json out;
    out["kind"] = c.kind == CertificateKind::darboux_fi ? "darboux-fi" : "rational-fi";
    auto exps = nlohmann::ordered_json::array();
    for (const auto& x : c.exponents) exps.push_back(text(s, x));
    out["exponents"] = std::move(exps);
    if (c.kind == CertificateKind::rational_fi) {
        auto ints = nlohmann::ordered_json::array();
        for (const auto& k : c.integer_exponents) ints.push_back(integer_value(k));
        out["integer_exponents"] = std::move(ints);
    }
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : c.factors) factors.push_back(text(s, f));
    out["factors"] = std::move(factors);
    auto cofactors = nlohmann::ordered_json::array();
    for (const auto& g : c.cofactors) cofactors.push_back(text(s, g));
    out["cofactors"] = std::move(cofactors);
    nlohmann::ordered_json ver;
    ver["valid"] = v.valid;
    ver["residual_zero"] = v.residual_zero;
    if (v.quotient_check)
        ver["quotient_check"] = *v.quotient_check;
    else
        ver["quotient_check"] = nullptr;
    ver["diagnostic"] = v.diagnostic;
    out["verification"] = std::move(ver);
    return out;
}

}  // namespace darboux::detail
