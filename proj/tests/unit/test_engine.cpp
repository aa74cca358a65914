#include "darboux/corpus.hpp"
#include "darboux/derivation.hpp"
#include "darboux/engine.hpp"
#include "darboux/parser.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace darboux;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kT{"t"};

LaurentPoly xy(std::string_view text) { return parse_expression(text, kXY, kT); }

Derivation derivation(std::initializer_list<std::string_view> parts) {
    std::vector<LaurentPoly> a;
    for (auto p : parts) a.push_back(xy(p));
    return Derivation(std::move(a));
}

std::vector<DarbouxPair> pairs_of(const Derivation& d, const std::vector<LaurentPoly>& fs) {
    std::vector<DarbouxPair> out;
    for (const auto& f : fs) {
        auto p = cofactor(d, f);
        if (!p) throw std::logic_error("test candidate is not Darboux");
        out.push_back(std::move(*p));
    }
    return out;
}

LaurentPoly weighted_sum(const std::vector<FieldScalar>& v, const std::vector<DarbouxPair>& pairs) {
    LaurentPoly s(pairs.front().cofactor.num_variables());
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * pairs[i].cofactor;
    return s;
}

// u and v are nonzero multiples of each other over Q(t).
bool proportional(const std::vector<FieldScalar>& u, const std::vector<FieldScalar>& v) {
    if (u.size() != v.size()) return false;
    std::size_t k = 0;
    while (k < u.size() && u[k].is_zero()) ++k;
    if (k == u.size() || v[k].is_zero()) return false;
    const FieldScalar ratio = v[k] / u[k];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u[i] * ratio == v[i])) return false;
    return true;
}

const Derivation kEuler = derivation({"x", "y"});
const FieldScalar kT1 = FieldScalar::parameter(0);

}  // namespace

TEST(Cofactor, EulerCoordinate) {
    const auto p = cofactor(kEuler, xy("x"));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->cofactor, xy("1"));
}

TEST(Cofactor, OptimalityLinearFactor) {
    const auto p = cofactor(derivation({"x*(x - 1)*(x - 2)", "t*y"}), xy("x - 1"));
    ASSERT_TRUE(p);
    // p / (x - 1) computed independently from the factored form.
    EXPECT_EQ(p->cofactor, xy("x") * xy("x - 2"));
}

TEST(Cofactor, EulerRejectsNonHomogeneous) {
    EXPECT_FALSE(cofactor(kEuler, xy("x + y^2")).has_value());
    // D(f) = x + 2y^2; at a zero of f = x + y^2, e.g. (-1, 1), D(f) = 1 != 0, so f does not divide D(f).
    const LaurentPoly df = apply(kEuler, xy("x + y^2"));
    EXPECT_EQ(df, xy("x + 2*y^2"));
    EXPECT_EQ(oracle::evaluate(xy("x + y^2"), {Rational(-1), Rational(1)}), Rational(0));
    EXPECT_EQ(oracle::evaluate(df, {Rational(-1), Rational(1)}), Rational(1));
}

TEST(Cofactor, InvalidCandidates) {
    EXPECT_THROW(cofactor(kEuler, LaurentPoly(2)), std::invalid_argument);
    EXPECT_THROW(cofactor(kEuler, xy("3")), std::invalid_argument);
    EXPECT_THROW(cofactor(kEuler, xy("x^-1")), std::invalid_argument);
}

TEST(Cofactor, AdditivityOnProducts) {
    const System s = gen_optimality_family({Rational(0), Rational(1), Rational(-1, 2)}, 3);
    std::mt19937 rng(43);
    const auto base = pairs_of(s.derivation, *s.candidates);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& a = base[rng() % base.size()];
        const auto& b = base[rng() % base.size()];
        const auto p = cofactor(s.derivation, a.f * b.f);
        ASSERT_TRUE(p);
        EXPECT_EQ(p->f, a.f * b.f);
        EXPECT_EQ(p->cofactor, a.cofactor + b.cofactor);
    }
}

TEST(RelationSpaceK, EulerIdenticalCofactors) {
    const auto pairs = pairs_of(kEuler, {xy("x"), xy("y")});
    const auto r = relation_space_K(pairs, support_polytope(kEuler));
    EXPECT_EQ(r.field, RelationField::over_K);
    ASSERT_EQ(r.dimension(), 1u);
    EXPECT_EQ(r.basis[0], (std::vector<FieldScalar>{1, -1}));
}

TEST(RelationSpaceK, ParametricEigenvalue) {
    const Derivation d = derivation({"x", "t*y"});
    const auto pairs = pairs_of(d, {xy("x"), xy("y")});
    const auto r = relation_space_K(pairs, support_polytope(d));
    ASSERT_EQ(r.dimension(), 1u);
    EXPECT_TRUE(proportional(r.basis[0], {-kT1, 1}));
    EXPECT_TRUE(weighted_sum(r.basis[0], pairs).is_zero());
}

TEST(RelationSpaceK, OptimalityLagrangeIdentity) {
    const std::vector<Rational> roots{Rational(0), Rational(1), Rational(2)};
    const System s = gen_optimality_family(roots, 2);
    const auto pairs = pairs_of(s.derivation, *s.candidates);
    const auto r = relation_space_K(pairs, support_polytope(s.derivation));
    ASSERT_EQ(r.dimension(), 1u);
    // sum_j g_j / p'(r_j) = 1 with p'(r_j) = prod_{k != j} (r_j - r_k), and g_{X_2} = t,
    // so (-t/p'(r_1), ..., -t/p'(r_d), 1) is a relation.
    std::vector<FieldScalar> expected;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        Rational dp = 1;
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (k != j) dp *= roots[j] - roots[k];
        expected.push_back(-kT1 / FieldScalar(Rational(dp)));
    }
    expected.push_back(1);
    EXPECT_TRUE(weighted_sum(expected, pairs).is_zero());
    EXPECT_TRUE(proportional(r.basis[0], expected));
    const FieldScalar half_t = kT1 / FieldScalar(2);
    EXPECT_EQ(r.basis[0], (std::vector<FieldScalar>{-half_t, kT1, -half_t, 1}));
}

TEST(RelationSpaceK, CofactorOutsideBasisIsADefect) {
    const auto pairs = pairs_of(kEuler, {xy("x"), xy("y")});
    EXPECT_THROW(relation_space_K(pairs, convex_hull(std::vector<LatticePoint>{{1, 1}})), InternalDefect);
    EXPECT_THROW(relation_space_K({}, support_polytope(kEuler)), std::invalid_argument);
}

TEST(RelationSpaceQ, Examples) {
    const auto euler = pairs_of(kEuler, {xy("x"), xy("y")});
    const auto rq = relation_space_Q(euler, support_polytope(kEuler));
    EXPECT_EQ(rq.field, RelationField::over_Q);
    ASSERT_EQ(rq.dimension(), 1u);
    EXPECT_EQ(rq.basis[0], (std::vector<FieldScalar>{1, -1}));

    const Derivation d = derivation({"x", "t*y"});
    EXPECT_EQ(relation_space_Q(pairs_of(d, {xy("x"), xy("y")}), support_polytope(d)).dimension(), 0u);

    const System s = gen_optimality_family({Rational(0), Rational(1), Rational(2)}, 2);
    EXPECT_EQ(relation_space_Q(pairs_of(s.derivation, *s.candidates), support_polytope(s.derivation)).dimension(), 0u);
}

TEST(RelationSpaceQ, RationalCombinationsOfParametricCofactors) {
    // Cofactors 1, t, 1 + t: only (1, 1, -1) holds identically in t.
    const Derivation d = derivation({"x", "t*y"});
    const auto pairs = pairs_of(d, {xy("x"), xy("y"), xy("x*y")});
    const auto rq = relation_space_Q(pairs, support_polytope(d));
    ASSERT_EQ(rq.dimension(), 1u);
    EXPECT_EQ(rq.basis[0], (std::vector<FieldScalar>{1, 1, -1}));
    EXPECT_EQ(relation_space_K(pairs, support_polytope(d)).dimension(), 2u);
}

TEST(RelationSpaces, PigeonholeAndInclusion) {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<Rational> roots;
        const int count = 1 + trial % 3;
        for (int j = 0; j < count; ++j) {
            Rational r(j * 2 - 1 + trial % 2, 1 + trial % 3);
            r.canonicalize();
            roots.push_back(r);
        }
        const System s = gen_optimality_family(roots, n);
        auto fs = *s.candidates;
        fs.push_back(fs[rng() % fs.size()] * fs[rng() % fs.size()]);
        const auto pairs = pairs_of(s.derivation, fs);
        const IntPolytope nd = support_polytope(s.derivation);
        const auto rk = relation_space_K(pairs, nd);
        const auto rq = relation_space_Q(pairs, nd);
        const auto b = lattice_points_nonneg(nd).size();
        EXPECT_GE(rk.dimension() + b, pairs.size());
        EXPECT_GE(rk.dimension(), n - 1 + 1);
        EXPECT_LE(rq.dimension(), rk.dimension());
        for (const auto& v : rk.basis) EXPECT_TRUE(weighted_sum(v, pairs).is_zero());
        for (const auto& v : rq.basis) {
            EXPECT_TRUE(weighted_sum(v, pairs).is_zero());
            for (const auto& c : v) EXPECT_TRUE(c.is_rational());
        }
    }
}

TEST(DarbouxFirstIntegral, Examples) {
    const auto euler = pairs_of(kEuler, {xy("x"), xy("y")});
    const auto nd = support_polytope(kEuler);
    const auto cert = darboux_first_integral(euler, nd);
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->kind, CertificateKind::darboux_fi);
    EXPECT_EQ(cert->exponents, (std::vector<FieldScalar>{1, -1}));
    EXPECT_TRUE(verify_certificate(kEuler, *cert).valid);

    EXPECT_FALSE(darboux_first_integral(pairs_of(kEuler, {xy("x")}), nd).has_value());

    const System s = gen_optimality_family({Rational(0), Rational(1), Rational(2)}, 2);
    const auto opt = darboux_first_integral(pairs_of(s.derivation, *s.candidates), support_polytope(s.derivation));
    ASSERT_TRUE(opt);
    const FieldScalar half_t = kT1 / FieldScalar(2);
    EXPECT_EQ(opt->exponents, (std::vector<FieldScalar>{-half_t, kT1, -half_t, 1}));
    const Verification v = verify_certificate(s.derivation, *opt);
    EXPECT_TRUE(v.valid);
    EXPECT_TRUE(v.residual_zero);
    EXPECT_FALSE(v.quotient_check.has_value());
}

TEST(RationalFirstIntegral, Examples) {
    const auto euler = pairs_of(kEuler, {xy("x"), xy("y")});
    const auto cert = rational_first_integral(euler, support_polytope(kEuler));
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->kind, CertificateKind::rational_fi);
    EXPECT_EQ(cert->integer_exponents, (std::vector<Integer>{1, -1}));
    // Quotient rule on x/y: D(x) y - x D(y) = xy - xy.
    EXPECT_TRUE((apply(kEuler, xy("x")) * xy("y") - xy("x") * apply(kEuler, xy("y"))).is_zero());
    const Verification v = verify_certificate(kEuler, *cert);
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.quotient_check, std::optional<bool>(true));

    const System s = gen_optimality_family({Rational(0), Rational(1), Rational(2)}, 2);
    EXPECT_FALSE(rational_first_integral(pairs_of(s.derivation, *s.candidates), support_polytope(s.derivation)));

    const Derivation d = derivation({"x", "2*y"});
    const auto weighted = rational_first_integral(pairs_of(d, {xy("x"), xy("y")}), support_polytope(d));
    ASSERT_TRUE(weighted);
    EXPECT_EQ(weighted->integer_exponents, (std::vector<Integer>{2, -1}));
    EXPECT_TRUE(verify_certificate(d, *weighted).valid);
}

TEST(RationalFirstIntegral, IntegerVectorIsPrimitiveWithPositiveLead) {
    // Cofactors 3, -6, 4: the first Q-relation is (2, 1, 0) after scaling.
    const Derivation d = derivation({"3*x", "-6*y"});
    const auto pairs = pairs_of(d, {xy("x"), xy("y"), xy("x^2")});
    const auto cert = rational_first_integral(pairs, support_polytope(d));
    ASSERT_TRUE(cert);
    mpz_class g = 0;
    for (const auto& e : cert->integer_exponents) g = gcd(g, e);
    EXPECT_EQ(g, 1);
    const auto lead = std::find_if(cert->integer_exponents.begin(), cert->integer_exponents.end(),
                                   [](const Integer& e) { return e != 0; });
    ASSERT_NE(lead, cert->integer_exponents.end());
    EXPECT_GT(*lead, 0);
    EXPECT_TRUE(verify_certificate(d, *cert).valid);
}

TEST(VerifyCertificate, RejectsWrongExponents) {
    auto cert = *darboux_first_integral(pairs_of(kEuler, {xy("x"), xy("y")}), support_polytope(kEuler));
    cert.exponents = {1, 1};
    const Verification v = verify_certificate(kEuler, cert);
    EXPECT_FALSE(v.valid);
    EXPECT_FALSE(v.residual_zero);
    EXPECT_FALSE(v.diagnostic.empty());

    auto rat = *rational_first_integral(pairs_of(kEuler, {xy("x"), xy("y")}), support_polytope(kEuler));
    rat.exponents = {1, 1};
    rat.integer_exponents = {1, 1};
    const Verification rv = verify_certificate(kEuler, rat);
    EXPECT_FALSE(rv.valid);
    EXPECT_EQ(rv.quotient_check, std::optional<bool>(false));
}

TEST(VerifyCertificate, RejectsNonDarbouxFactor) {
    auto cert = *darboux_first_integral(pairs_of(kEuler, {xy("x"), xy("y")}), support_polytope(kEuler));
    cert.factors[1] = xy("x + y^2");
    const Verification v = verify_certificate(kEuler, cert);
    EXPECT_FALSE(v.valid);
    EXPECT_NE(v.diagnostic.find("factor 2"), std::string::npos);

    cert.factors.pop_back();
    EXPECT_THROW(verify_certificate(kEuler, cert), std::invalid_argument);
}

TEST(Certificates, BuiltCertificatesAlwaysVerify) {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const System s = trial % 2 ? gen_euler(2 + trial % 3)
                                   : gen_optimality_family({Rational(trial), Rational(trial + 1)}, 2 + trial % 2);
        auto fs = *s.candidates;
        fs.push_back(fs[rng() % fs.size()].pow(2));
        const auto pairs = pairs_of(s.derivation, fs);
        const IntPolytope nd = support_polytope(s.derivation);
        for (const auto& cert : {darboux_first_integral(pairs, nd), rational_first_integral(pairs, nd)})
            if (cert) EXPECT_TRUE(verify_certificate(s.derivation, *cert).valid);
    }
}
