#pragma once

#include <set>

#include "folia/deformation.hpp"

namespace folia {

// The projective variable is always the last coordinate of the extended
// space: forms in n variables map to forms in n + 1 variables.

/// z eta - i_R(eta) dz, homogeneous of degree e + 1 in n + 1 variables.
/// Throws PreconditionError when eta is not a one-form of total degree e.
Form projectivize(const Form& eta, int e);

struct Dehomogenized {
    Form form;
    /// Homogeneity of the result.
    Homogeneity degree;
    /// deg(eta_tilde) - 1, the degree a projectivized form comes back with.
    int expected_degree = 0;
    /// Total degrees of the monomials that survived.
    std::set<int> degrees_present;

    /// Homogeneous of the expected degree (or zero).
    bool on_degree() const {
        return degree.is_zero() || (degree.is_homogeneous() && degree.degree == expected_degree);
    }
};

/// Sets the last variable to one and drops the dz component. The degree
/// report flags results that are mixed or of an unexpected degree.
Dehomogenized dehomogenize(const Form& eta_tilde);

/// i_R(eta) == 0.
bool descends(const Form& eta);

/// With omega integrable and deform(omega, eta) == 0 at equal degrees, the
/// projectivizations satisfy the same equation, and the converse round trip
/// (dehomogenize back, the equation still holds) is checked as well.
/// Throws PreconditionError when the hypotheses fail.
bool verify_affine_def_lemma(const Form& omega, const Form& eta);

struct ProjectivizedParameters {
    AffineLogarithmic data; // factors with z appended, eigenvalues with -mu appended
    Scalar mu;
    /// Whether realize(data) == z omega - mu F dz held identically.
    bool verified = false;
    /// mu == 0 makes the last eigenvalue vanish.
    bool generic_projectivization = true;
};

/// Logarithmic parameters of projectivize(realize(spec)). The rational case
/// uses eigenvalues (-s, r, -mu). Throws PreconditionError for Exact and Raw.
ProjectivizedParameters projectivized_log_parameters(const FoliationSpec& spec);

/// First-order deformations of a descending omega_tilde among descending
/// homogeneous one-forms of degree e, modulo C.omega_tilde when e matches.
/// Throws PreconditionError unless the ambient dimension is at least three
/// and omega_tilde is integrable with i_R(omega_tilde) == 0.
SubspaceBasis projective_deformation_space(const Form& omega_tilde, int e);

} // namespace folia
