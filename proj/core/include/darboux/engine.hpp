#pragma once

#include "darboux/derivation.hpp"
#include "darboux/field_scalar.hpp"
#include "darboux/laurent_poly.hpp"
#include "darboux/polytope.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

/// A violated theorem-level invariant: always a bug, never bad input.
class InternalDefect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// f with D(f) = g * f.
struct DarbouxPair {
    LaurentPoly f;
    LaurentPoly cofactor;
};

/// Extracts the cofactor of f, or nullopt when f is not a Darboux polynomial.
///
/// Also checks that N(g) lies in N_D and the nonnegative orthant; a failure
/// raises InternalDefect. Throws std::invalid_argument when f is zero,
/// constant, or not a polynomial.
std::optional<DarbouxPair> cofactor(const Derivation& d, const LaurentPoly& f);

enum class RelationField { over_K, over_Q };

/// Linear relations sum_i v_i g_i = 0 among the cofactors of the supplied pairs.
struct RelationSpace {
    RelationField field = RelationField::over_K;
    std::vector<std::vector<FieldScalar>> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Relations over Q(t_1..t_k). Basis vectors are scaled so that their first
/// entry that is a nonzero rational equals 1 (or, with no rational entry,
/// so the first nonzero entry has a monic numerator).
RelationSpace relation_space_K(std::span<const DarbouxPair> pairs, const IntPolytope& nd);

/// Relations with rational coefficients, i.e. those holding identically in
/// the parameters. Basis vectors have first nonzero entry 1.
RelationSpace relation_space_Q(std::span<const DarbouxPair> pairs, const IntPolytope& nd);

enum class CertificateKind { darboux_fi, rational_fi };

/// Proof data for the first integral prod_i f_i^{lambda_i}.
struct Certificate {
    CertificateKind kind = CertificateKind::darboux_fi;
    std::vector<FieldScalar> exponents;
    /// rational_fi only: the same exponents as integers, primitive, first nonzero positive.
    std::vector<Integer> integer_exponents;
    std::vector<LaurentPoly> factors;
    std::vector<LaurentPoly> cofactors;
};

std::optional<Certificate> darboux_first_integral(std::span<const DarbouxPair> pairs,
                                                  const IntPolytope& nd);
std::optional<Certificate> rational_first_integral(std::span<const DarbouxPair> pairs,
                                                   const IntPolytope& nd);

struct Verification {
    bool valid = false;
    bool residual_zero = false;
    /// rational_fi only: D(P) Q - P D(Q) == 0.
    std::optional<bool> quotient_check;
    std::string diagnostic;
};

/// Recomputes every cofactor from D and checks the relation exactly; for
/// rational certificates also checks D(P/Q) = 0 through its numerator.
/// Throws std::invalid_argument when the list lengths disagree.
Verification verify_certificate(const Derivation& d, const Certificate& cert);

}  // namespace darboux
