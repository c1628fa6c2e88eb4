#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folia/form.hpp"

namespace folia {

/// r f1 df2 - s f2 df1 with homogeneous f1, f2.
struct AffineRational {
    Poly f1;
    Poly f2;
    Scalar r;
    Scalar s;
};

/// sum_k lambda_k F_k df_k with F_k the product of the f_j, j != k.
struct AffineLogarithmic {
    std::vector<Poly> f;
    std::vector<Scalar> lambda;

    /// Two factors: the form is also an affine rational one.
    bool is_rational_case() const noexcept { return f.size() == 2; }
};

/// dP.
struct Exact {
    Poly p;
};

/// A one-form given directly.
struct Raw {
    Form omega;
};

using FoliationSpec = std::variant<AffineRational, AffineLogarithmic, Exact, Raw>;

bool is_rational(const FoliationSpec& spec);
bool is_logarithmic(const FoliationSpec& spec);
/// Rational or logarithmic: the kinds with a canonical integrating factor.
bool has_parameters(const FoliationSpec& spec);

std::size_t ambient_dim(const FoliationSpec& spec);

/// Throws PreconditionError when the spec breaks its invariants: parameters
/// nonzero, homogeneous, non-constant, one ring; s >= 2 logarithmic factors
/// with as many eigenvalues; a homogeneous one-form for Raw.
void validate(const FoliationSpec& spec);

/// Total degree e of the realized one-form.
int form_degree(const FoliationSpec& spec);

/// Logarithmic data of a rational or logarithmic spec; the rational case
/// maps to factors (f1, f2) with eigenvalues (-s, r).
AffineLogarithmic as_logarithmic(const FoliationSpec& spec);

/// The homogeneous one-form described by `spec`.
Form realize(const FoliationSpec& spec);

/// omega ^ d omega == 0.
bool is_integrable(const Form& omega);

struct IntegratingFactor {
    Poly F;
    bool verified = false;
};

/// F = f1 f2 or prod f_i, with `verified` telling whether F d omega == dF ^ omega.
/// Throws PreconditionError for Exact and Raw specs.
IntegratingFactor integrating_factor(const FoliationSpec& spec);

/// Whether F d omega == dF ^ omega, i.e. omega / F is closed.
bool is_integrating_factor(const Poly& F, const Form& omega);

/// The constant mu with i_R(omega) = mu F, obtained by exact division.
/// Throws InternalError if the quotient is not a constant.
Scalar mu_of(const FoliationSpec& spec);

enum class Verdict { generic, not_generic, inconclusive };

struct GenericityReport {
    bool normal_crossings_ok = false;
    bool eigenvalues_ok = false;
    Scalar mu;
    bool mu_nonzero = false;
    int trials_used = 0;
    /// Primes used by the trials, in order.
    std::vector<std::uint64_t> primes;
    /// Trials that found at least one point on the divisor.
    int trials_with_zeros = 0;
    /// Trials that found a point where the divisor is not normal crossing.
    int trials_failed = 0;
    Verdict verdict = Verdict::inconclusive;
};

std::string to_string(Verdict v);

/// Genericity of a rational or logarithmic spec.
///
/// Eigenvalue conditions are exact: pairwise distinct and nonzero (rational
/// case: r, s nonzero and r != -s). Normal crossings is probabilistic: each
/// trial reduces the factors modulo a seeded random prime p = 1 (mod 4) and
/// visits every point of the projective space P^{n-1}(F_p); at each point on
/// the divisor the gradients of the vanishing factors must be independent.
/// A factor is judged to fail normal crossings when more than half of the
/// trials that met the divisor found a bad point.
GenericityReport genericity_check(const FoliationSpec& spec, int trials, std::uint64_t seed);

/// Smoothness of {P = 0} in P^{n-1} by the same reduction-and-enumeration
/// scheme: no point where every partial derivative vanishes. For n == 3 this
/// is the condition codim Sing(dP) >= 3. Larger n returns inconclusive,
/// since isolated singular points are then allowed.
Verdict exact_hypothesis_check(const Poly& p, int trials, std::uint64_t seed);

struct IntegrationLemmaResult {
    std::vector<Scalar> lambda;
    Poly g;
    bool residual_ok = false;
};

/// Writes omega = unit * prod f_i^{n_i} [ sum lambda_i df_i / f_i + d(g / prod f_i^{n_i - 1}) ]
/// by solving the cleared linear system in lambda and the coefficients of g.
/// Free unknowns are set to zero. Throws PreconditionError when
/// unit * prod f_i^{n_i} is not an integrating factor of omega.
IntegrationLemmaResult integration_lemma_decompose(const Form& omega, const std::vector<Poly>& factors,
                                                   const std::vector<int>& mult, const Scalar& unit = Scalar(1));

} // namespace folia
