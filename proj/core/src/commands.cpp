#include "darboux/commands.hpp"

#include "darboux/corpus.hpp"
#include "darboux/derivation.hpp"
#include "darboux/engine.hpp"
#include "darboux/parser.hpp"
#include "darboux/svg.hpp"
#include "darboux/system_file.hpp"
#include "json_detail.hpp"

namespace darboux {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

CommandOutput failure(int code, std::string message) {
    CommandOutput out;
    out.exit_code = code;
    out.error = std::move(message);
    return out;
}

// Runs body, mapping the library's exception types onto exit codes.
template <class Body>
CommandOutput guarded(Body&& body) {
    try {
        return body();
    } catch (const InternalDefect& e) {
        return failure(kExitInternalDefect, std::string("internal defect: ") + e.what());
    } catch (const UnsupportedDimension& e) {
        return failure(kExitUnsupported, e.what());
    } catch (const InputError& e) {
        return failure(kExitInput, e.what());
    } catch (const ParseError& e) {
        return failure(kExitInput, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(kExitInput, e.what());
    }
}

}  // namespace

CommandOutput run_bounds(const System& system, bool with_svg) {
    return guarded([&] {
        const BoundsReport report = bounds_report(system.derivation);
        ordered_json doc;
        doc["command"] = "bounds";
        doc["system"] = detail::system_object(system);
        doc["bounds"] = detail::bounds_object(report);
        CommandOutput out;
        if (with_svg) out.svg = emit_svg(report.polytope, true);
        out.json = dump(doc);
        return out;
    });
}

CommandOutput run_certify(const System& system) {
    return guarded([&] {
        if (!system.candidates || system.candidates->empty())
            return failure(kExitNoCandidates, "certify: the system has no darboux_candidates");
        const Derivation& d = system.derivation;
        const BoundsReport report = bounds_report(d);

        std::vector<DarbouxPair> pairs;
        auto pair_list = ordered_json::array();
        for (const auto& f : *system.candidates) {
            ordered_json entry;
            entry["candidate"] = detail::text(system, f);
            std::optional<DarbouxPair> pair;
            std::string reason;
            try {
                pair = cofactor(d, f);
                if (!pair) reason = "D(f) is not a polynomial multiple of f";
            } catch (const std::invalid_argument& e) {
                reason = e.what();
            }
            entry["darboux"] = pair.has_value();
            if (pair) {
                entry["cofactor"] = detail::text(system, pair->cofactor);
                pairs.push_back(std::move(*pair));
            } else {
                entry["reason"] = reason;
            }
            pair_list.push_back(std::move(entry));
        }

        ordered_json doc;
        doc["command"] = "certify";
        doc["system"] = detail::system_object(system);
        doc["bounds"] = detail::bounds_object(report);
        doc["pairs"] = std::move(pair_list);

        bool all_verified = true;
        auto certs = ordered_json::array();
        ordered_json relations;
        if (pairs.empty()) {
            relations["over_K"] = detail::relation_object(system, {RelationField::over_K, {}});
            relations["over_Q"] = detail::relation_object(system, {RelationField::over_Q, {}});
        } else {
            relations["over_K"] = detail::relation_object(system, relation_space_K(pairs, report.polytope));
            relations["over_Q"] = detail::relation_object(system, relation_space_Q(pairs, report.polytope));
            for (const auto& cert : {darboux_first_integral(pairs, report.polytope),
                                     rational_first_integral(pairs, report.polytope)}) {
                if (!cert) continue;
                const Verification v = verify_certificate(d, *cert);
                all_verified = all_verified && v.valid;
                certs.push_back(detail::certificate_object(system, *cert, v));
            }
        }
        doc["relations"] = std::move(relations);
        doc["certificates"] = std::move(certs);
        doc["status"] = all_verified ? "verified" : "verification-failed";

        CommandOutput out;
        out.json = dump(doc);
        out.exit_code = all_verified ? kExitOk : kExitVerificationFailed;
        if (!all_verified) out.error = "certify: a certificate failed verification";
        return out;
    });
}

CommandOutput run_cofactor(const System& system, std::string_view candidate) {
    return guarded([&] {
        LaurentPoly f(system.variables.size());
        try {
            f = parse_expression(candidate, system.variables, system.parameters);
        } catch (const ParseError& e) {
            throw InputError(std::string("--candidate: ") + e.what());
        }
        ordered_json doc;
        doc["command"] = "cofactor";
        doc["candidate"] = detail::text(system, f);
        const auto pair = cofactor(system.derivation, f);
        doc["darboux"] = pair.has_value();
        if (pair) {
            doc["cofactor"] = detail::text(system, pair->cofactor);
            doc["cofactor_newton_polytope"] = detail::points_array(newton_polytope(pair->cofactor).vertices());
        } else {
            doc["cofactor"] = nullptr;
        }
        CommandOutput out;
        out.json = dump(doc);
        return out;
    });
}

CommandOutput run_corpus(const CorpusRequest& request) {
    return guarded([&] {
        System sys = [&] {
            if (request.family == "dense") return gen_dense(request.n, request.d, request.seed);
            if (request.family == "figure-e") return gen_figure_family(request.e);
            if (request.family == "optimality") return gen_optimality_family(request.roots, request.n);
            if (request.family == "euler") return gen_euler(request.n);
            throw std::invalid_argument("unknown family '" + request.family + "'");
        }();
        CommandOutput out;
        out.json = system_file_json(sys);
        return out;
    });
}

std::vector<Rational> parse_root_list(std::string_view text) {
    std::vector<Rational> roots;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item(text.substr(start, comma - start));
        Rational q;
        if (item.empty() || q.set_str(item, 10) != 0)
            throw std::invalid_argument("malformed root '" + item + "'");
        if (q.get_den() == 0) throw std::invalid_argument("malformed root '" + item + "'");
        q.canonicalize();
        roots.push_back(q);
        start = comma + 1;
    }
    return roots;
}

}  // namespace darboux
