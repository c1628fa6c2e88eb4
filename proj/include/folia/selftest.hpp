#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

/// Seeded generator for randomized instances. Draws go through the raw
/// mt19937_64 stream (not std distributions) so a seed means the same
/// instances on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool chance(unsigned percent) { return uniform(0, 99) < static_cast<std::int64_t>(percent); }

private:
    std::mt19937_64 engine_;
};

/// Small nonzero coefficient: integers in [-5, 5], sometimes a fraction,
/// and a Gaussian value when `gaussian` is set and a coin says so.
Scalar random_scalar(Rng& rng, bool gaussian = false);

/// Nonzero homogeneous polynomial of degree d with at most `max_terms` terms.
Poly random_homogeneous(std::size_t n, int d, Rng& rng, int max_terms = 4);

/// Homogeneous k-form whose coefficients have degree `coeff_degree`; may be
/// zero only when no k-form exists (k > n).
Form random_form(std::size_t n, std::size_t k, int coeff_degree, Rng& rng, int max_terms = 3);

VectorField random_vector_field(std::size_t n, int degree, Rng& rng);

/// Rational or logarithmic spec with parameter degrees in [1, max_degree].
FoliationSpec random_parameter_spec(std::size_t n, int max_degree, Rng& rng);

struct IdentityTally {
    std::string name;
    int checked = 0;
    int passed = 0;
};

struct IdentitySuiteResult {
    int instances = 0;
    std::vector<IdentityTally> identities;

    bool all_passed() const;
};

/// Leibniz rule, d o d = 0, the anti-derivation rule for i_X, Euler's
/// formula and the Cartan formula on random homogeneous instances with
/// n in {3, 4} and total degrees at most 6.
IdentitySuiteResult exterior_identity_suite(int instances, std::uint64_t seed);

struct FactorSuiteResult {
    int specs = 0;
    int rational = 0;
    int logarithmic = 0;
    int passed = 0;
    /// Rendered realizations of the specs that failed, for diagnostics.
    std::vector<Form> failures;

    bool all_passed() const { return passed == specs; }
};

/// F d omega == dF ^ omega for random rational and logarithmic specs
/// (n = 3, parameter degrees at most 3).
FactorSuiteResult integrating_factor_suite(int specs, std::uint64_t seed);

} // namespace folia
