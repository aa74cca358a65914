// darboux: sparse integrability bounds and first-integral certificates for
// polynomial derivations.
//
//   darboux bounds <file> [--svg out.svg]
//   darboux certify <file>
//   darboux cofactor <file> --candidate <expr>
//   darboux corpus --family {dense|figure-e|optimality|euler} [options]
//
// Reports go to stdout as JSON; diagnostics go to stderr. See
// darboux/commands.hpp for the exit codes.

#include "darboux/commands.hpp"
#include "darboux/system_file.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace darboux;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return static_cast<bool>(out);
}

int finish(const CommandOutput& result, const std::string& svg_path = {}) {
    if (!result.error.empty()) std::cerr << "darboux: " << result.error << '\n';
    if (!result.json.empty()) std::cout << result.json;
    if (!svg_path.empty() && !result.svg.empty() && !write_file(svg_path, result.svg)) {
        std::cerr << "darboux: " << svg_path << ": cannot write file\n";
        return kExitInput;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse Darboux and Jouanolou bounds from Newton polytopes"};
    app.require_subcommand(1);

    std::string file;
    std::string svg_path;
    std::string candidate;

    auto* bounds = app.add_subcommand("bounds", "Newton polytope N_D, bound B and thresholds");
    bounds->add_option("file", file, "System file (JSON)")->required();
    bounds->add_option("--svg", svg_path, "Write N_D with its lattice points as SVG (n = 2)");

    auto* certify = app.add_subcommand("certify", "Classify candidates and build first-integral certificates");
    certify->add_option("file", file, "System file (JSON)")->required();

    auto* cof = app.add_subcommand("cofactor", "Cofactor of a single candidate");
    cof->add_option("file", file, "System file (JSON)")->required();
    cof->add_option("--candidate", candidate, "Candidate expression")->required();

    CorpusRequest request;
    std::string roots = "0,1,2";
    std::string out_path;
    auto* corpus = app.add_subcommand("corpus", "Emit a system file for a built-in family");
    corpus->add_option("--family", request.family, "dense | figure-e | optimality | euler")
        ->required()
        ->check(CLI::IsMember({"dense", "figure-e", "optimality", "euler"}));
    corpus->add_option("--n", request.n, "Number of variables")->check(CLI::PositiveNumber);
    corpus->add_option("--d", request.d, "Total degree (dense)")->check(CLI::PositiveNumber);
    corpus->add_option("--seed", request.seed, "Coefficient stream seed (dense)");
    corpus->add_option("--e", request.e, "Family parameter e (figure-e)")->check(CLI::PositiveNumber);
    corpus->add_option("--roots", roots, "Distinct rational roots, comma separated (optimality)");
    corpus->add_option("--out", out_path, "Write the system file here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*corpus) {
            try {
                request.roots = parse_root_list(roots);
            } catch (const std::invalid_argument& e) {
                std::cerr << "darboux: --roots: " << e.what() << '\n';
                return kExitUsage;
            }
            CommandOutput result = run_corpus(request);
            if (!out_path.empty() && result.exit_code == kExitOk) {
                if (!write_file(out_path, result.json)) {
                    std::cerr << "darboux: " << out_path << ": cannot write file\n";
                    return kExitInput;
                }
                result.json.clear();
            }
            return finish(result);
        }

        const System system = parse_system_file(read_file(file), file);
        if (*bounds) return finish(run_bounds(system, !svg_path.empty()), svg_path);
        if (*certify) return finish(run_certify(system));
        if (*cof) return finish(run_cofactor(system, candidate));
    } catch (const InputError& e) {
        std::cerr << "darboux: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "darboux: internal defect: " << e.what() << '\n';
        return kExitInternalDefect;
    }
    return kExitUsage;
}
