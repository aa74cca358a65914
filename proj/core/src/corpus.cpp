#include "darboux/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace darboux {

namespace {

std::vector<std::string> short_names(std::size_t n) {
    if (n == 2) return {"x", "y"};
    if (n == 3) return {"x", "y", "z"};
    return default_variable_names(n);
}

// All exponent vectors of length n with total degree <= d, grlex ascending.
std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
    std::vector<Monomial> out;
    Monomial m(n);
    // Odometer on [0, d]^n filtered by degree.
    for (;;) {
        if (m.total_degree() <= d) out.push_back(m);
        std::size_t j = 0;
        while (j < n) {
            if (m[j] < d) {
                ++m.at(j);
                break;
            }
            m.at(j) = 0;
            ++j;
        }
        if (j == n) break;
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

Monomial mono2(int a, int b) { return Monomial{a, b}; }

}  // namespace

System gen_dense(std::size_t n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("gen_dense needs n >= 1 and d >= 1");
    // mt19937_64 output is fully specified, so the stream is portable; the
    // distribution step is done by hand for the same reason.
    std::mt19937_64 engine(seed);
    auto positive = [&engine] {
        const long num = static_cast<long>(engine() % 9) + 1;
        const long den = static_cast<long>(engine() % 4) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    const auto monos = monomials_up_to(n, d);
    std::vector<LaurentPoly> comps;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly a(n);
        for (const auto& m : monos) a.add_term(m, FieldScalar(positive()));
        comps.push_back(std::move(a));
    }
    return {short_names(n), {}, Derivation(std::move(comps)), std::nullopt};
}

System gen_figure_family(int e) {
    if (e < 1) throw std::invalid_argument("figure family needs e >= 1");
    LaurentPoly a(2);
    a.add_term(mono2(e, e), FieldScalar(1));
    a.add_term(mono2(e - 1, e), FieldScalar(2));
    a.add_term(mono2(e, e - 1), FieldScalar(3));
    a.add_term(mono2(0, 0), FieldScalar(5));
    return {short_names(2), {}, Derivation({a, a}), std::nullopt};
}

System gen_optimality_family(const std::vector<Rational>& roots, std::size_t n) {
    if (n < 2) throw std::invalid_argument("optimality family needs n >= 2");
    if (roots.empty()) throw std::invalid_argument("optimality family needs at least one root");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw std::invalid_argument("optimality family roots must be distinct");

    const LaurentPoly x1 = LaurentPoly::variable(n, 0);
    std::vector<LaurentPoly> candidates;
    LaurentPoly p = LaurentPoly::constant(n, FieldScalar(1));
    for (const auto& r : roots) {
        const LaurentPoly factor = x1 - LaurentPoly::constant(n, FieldScalar(r));
        p = p * factor;
        candidates.push_back(factor);
    }
    std::vector<LaurentPoly> comps{p};
    std::vector<std::string> params;
    for (std::size_t i = 1; i < n; ++i) {
        const LaurentPoly xi = LaurentPoly::variable(n, i);
        comps.push_back(FieldScalar::parameter(i - 1) * xi);
        candidates.push_back(xi);
        params.push_back("t" + std::to_string(i + 1));
    }
    return {short_names(n), params, Derivation(std::move(comps)), std::move(candidates)};
}

System gen_euler(std::size_t n) {
    std::vector<LaurentPoly> comps;
    std::vector<LaurentPoly> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        comps.push_back(LaurentPoly::variable(n, i));
        candidates.push_back(LaurentPoly::variable(n, i));
    }
    return {short_names(n), {}, Derivation(std::move(comps)), std::move(candidates)};
}

}  // namespace darboux
