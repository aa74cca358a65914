#include "darboux/engine.hpp"

#include "darboux/linear_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace darboux {

namespace {

LatticePoint as_point(const Monomial& m, std::size_t n) {
    LatticePoint p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = m[i];
    return p;
}

Monomial as_monomial(const LatticePoint& p) {
    std::vector<int> e(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) e[i] = static_cast<int>(p[i]);
    return Monomial(std::move(e));
}

void check_cofactor_support(const LaurentPoly& g, const IntPolytope& nd) {
    const std::size_t n = g.num_variables();
    for (const auto& [m, c] : g.terms()) {
        const LatticePoint p = as_point(m, n);
        if (!m.is_nonnegative() || !contains_point(nd, std::span<const std::int64_t>(p)))
            throw InternalDefect("cofactor support escapes N_D and the nonnegative orthant");
    }
}

// Rows: lattice points of N_D in grlex order. Columns: the cofactors.
Matrix<FieldScalar> cofactor_matrix(std::span<const DarbouxPair> pairs, const IntPolytope& nd) {
    if (pairs.empty()) throw std::invalid_argument("relation space of an empty pair list");
    std::vector<Monomial> rows;
    for (const auto& p : lattice_points_nonneg(nd)) rows.push_back(as_monomial(p));
    std::sort(rows.begin(), rows.end(), GrlexLess{});
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], r);

    Matrix<FieldScalar> a(rows.size(), std::vector<FieldScalar>(pairs.size()));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        for (const auto& [m, c] : pairs[j].cofactor.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw InternalDefect("cofactor " + std::to_string(j + 1) +
                                     " has a monomial outside N_D and the nonnegative orthant");
            a[it->second][j] = c;
        }
    }
    return a;
}

void normalize_field_vector(std::vector<FieldScalar>& v) {
    FieldScalar scale;
    for (const auto& x : v) {
        if (!x.is_zero() && x.is_rational()) {
            scale = x;
            break;
        }
    }
    if (scale.is_zero()) {
        for (const auto& x : v) {
            if (!x.is_zero()) {
                scale = FieldScalar(x.numerator().leading_coefficient());
                break;
            }
        }
    }
    if (scale.is_zero()) return;
    const FieldScalar inv = scale.inverse();
    for (auto& x : v) x = x * inv;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer k = Integer(x.get_num()) * (den / Integer(x.get_den()));
        g = gcd(g, k);
        out.push_back(k);
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& k : out) {
        if (sgn(k) != 0) {
            sign = sgn(k);
            break;
        }
    }
    for (auto& k : out) k = (k / g) * sign;
    return out;
}

Certificate make_certificate(std::span<const DarbouxPair> pairs, CertificateKind kind,
                             std::vector<FieldScalar> exponents) {
    Certificate c;
    c.kind = kind;
    c.exponents = std::move(exponents);
    for (const auto& p : pairs) {
        c.factors.push_back(p.f);
        c.cofactors.push_back(p.cofactor);
    }
    return c;
}

}  // namespace

std::optional<DarbouxPair> cofactor(const Derivation& d, const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cofactor: the zero polynomial");
    if (!f.is_polynomial()) throw std::invalid_argument("cofactor: candidate has a negative exponent");
    if (f.is_constant()) throw std::invalid_argument("cofactor: candidate is constant");
    const LaurentPoly df = apply(d, f);
    auto g = exact_divide(df, f);
    if (!g || !g->is_polynomial()) return std::nullopt;
    check_cofactor_support(*g, support_polytope(d));
    return DarbouxPair{f, *g};
}

RelationSpace relation_space_K(std::span<const DarbouxPair> pairs, const IntPolytope& nd) {
    Matrix<FieldScalar> a = cofactor_matrix(pairs, nd);
    RelationSpace space;
    space.field = RelationField::over_K;
    space.basis = kernel_basis(std::move(a), pairs.size());
    for (auto& v : space.basis) normalize_field_vector(v);
    return space;
}

RelationSpace relation_space_Q(std::span<const DarbouxPair> pairs, const IntPolytope& nd) {
    const Matrix<FieldScalar> a = cofactor_matrix(pairs, nd);
    const std::size_t cols = pairs.size();

    ParamPoly common_den(1);
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) common_den = lcm(common_den, x.denominator());

    // Split every row by parameter monomial of the cleared entries.
    Matrix<Rational> q;
    for (const auto& row : a) {
        std::map<Monomial, std::vector<Rational>, GrlexLess> blocks;
        for (std::size_t j = 0; j < cols; ++j) {
            if (row[j].is_zero()) continue;
            for (const auto& [mu, c] : param_components(row[j], common_den)) {
                auto& block = blocks.try_emplace(mu, std::vector<Rational>(cols)).first->second;
                block[j] = c;
            }
        }
        for (auto& [mu, block] : blocks) q.push_back(std::move(block));
    }

    RelationSpace space;
    space.field = RelationField::over_Q;
    for (auto& v : kernel_basis(std::move(q), cols)) {
        std::vector<FieldScalar> fv(v.begin(), v.end());
        normalize_field_vector(fv);
        space.basis.push_back(std::move(fv));
    }
    return space;
}

std::optional<Certificate> darboux_first_integral(std::span<const DarbouxPair> pairs,
                                                  const IntPolytope& nd) {
    RelationSpace space = relation_space_K(pairs, nd);
    if (space.basis.empty()) return std::nullopt;
    return make_certificate(pairs, CertificateKind::darboux_fi, std::move(space.basis.front()));
}

std::optional<Certificate> rational_first_integral(std::span<const DarbouxPair> pairs,
                                                   const IntPolytope& nd) {
    const RelationSpace space = relation_space_Q(pairs, nd);
    if (space.basis.empty()) return std::nullopt;
    std::vector<Rational> v;
    for (const auto& x : space.basis.front()) v.push_back(x.rational_value());
    const std::vector<Integer> ints = primitive_integer_vector(v);
    std::vector<FieldScalar> exps;
    for (const auto& k : ints) exps.emplace_back(Rational(k));
    Certificate c = make_certificate(pairs, CertificateKind::rational_fi, std::move(exps));
    c.integer_exponents = ints;
    return c;
}

Verification verify_certificate(const Derivation& d, const Certificate& cert) {
    const std::size_t m = cert.factors.size();
    if (cert.cofactors.size() != m || cert.exponents.size() != m)
        throw std::invalid_argument("certificate lists have different lengths");
    Verification out;
    const std::size_t n = d.num_variables();

    std::vector<LaurentPoly> recomputed;
    for (std::size_t i = 0; i < m; ++i) {
        std::optional<DarbouxPair> pair;
        try {
            pair = cofactor(d, cert.factors[i]);
        } catch (const std::invalid_argument& e) {
            out.diagnostic = "factor " + std::to_string(i + 1) + ": " + e.what();
            return out;
        }
        if (!pair) {
            out.diagnostic = "factor " + std::to_string(i + 1) + " is not a Darboux polynomial";
            return out;
        }
        if (!(pair->cofactor == cert.cofactors[i])) {
            out.diagnostic = "cofactor " + std::to_string(i + 1) + " does not match D(f)/f";
            return out;
        }
        recomputed.push_back(pair->cofactor);
    }
    if (std::all_of(cert.exponents.begin(), cert.exponents.end(),
                    [](const FieldScalar& x) { return x.is_zero(); })) {
        out.diagnostic = "all exponents are zero";
        return out;
    }

    LaurentPoly residual(n);
    for (std::size_t i = 0; i < m; ++i) residual += cert.exponents[i] * recomputed[i];
    out.residual_zero = residual.is_zero();
    if (!out.residual_zero) out.diagnostic = "sum of exponent-weighted cofactors is nonzero";

    if (cert.kind == CertificateKind::rational_fi) {
        if (cert.integer_exponents.size() != m) {
            out.diagnostic = "rational certificate lacks integer exponents";
            out.quotient_check = false;
            return out;
        }
        LaurentPoly p = LaurentPoly::constant(n, FieldScalar(1));
        LaurentPoly q = LaurentPoly::constant(n, FieldScalar(1));
        for (std::size_t i = 0; i < m; ++i) {
            const Integer& k = cert.integer_exponents[i];
            if (!(cert.exponents[i] == FieldScalar(Rational(k)))) {
                out.diagnostic = "integer exponents disagree with exponents";
                out.quotient_check = false;
                return out;
            }
            if (!k.fits_ulong_p() && !Integer(-k).fits_ulong_p()) {
                out.diagnostic = "exponent too large";
                out.quotient_check = false;
                return out;
            }
            if (sgn(k) > 0) p = p * cert.factors[i].pow(static_cast<unsigned>(k.get_ui()));
            if (sgn(k) < 0) q = q * cert.factors[i].pow(static_cast<unsigned>(Integer(-k).get_ui()));
        }
        const LaurentPoly numerator = apply(d, p) * q - p * apply(d, q);
        out.quotient_check = numerator.is_zero();
        if (!*out.quotient_check && out.diagnostic.empty())
            out.diagnostic = "D(P) Q - P D(Q) is nonzero";
    }
    out.valid = out.residual_zero && out.quotient_check.value_or(true);
    return out;
}

}  // namespace darboux
