#include "folia/projective.hpp"

#include "folia/error.hpp"

namespace folia {

Form projectivize(const Form& eta, int e) {
    if (eta.arity() != 1) throw PreconditionError("only one-forms can be projectivized");
    const Homogeneity h = total_degree(eta);
    if (h.is_mixed()) throw PreconditionError("projectivize needs a homogeneous one-form");
    if (h.is_homogeneous() && h.degree != e) throw PreconditionError("one-form does not have the stated degree");
    const std::size_t n = eta.ambient_dim();
    const Poly contracted = contract(radial_field(n), eta).as_function().extended(n + 1);
    const Poly z = Poly::variable(n + 1, n);
    return z * eta.extended(n + 1) - contracted * Form::differential(n + 1, n);
}

Dehomogenized dehomogenize(const Form& eta_tilde) {
    if (eta_tilde.arity() != 1) throw PreconditionError("only one-forms can be dehomogenized");
    const std::size_t n1 = eta_tilde.ambient_dim();
    if (n1 < 2) throw PreconditionError("dehomogenize needs at least two variables");
    const std::size_t last = n1 - 1;
    Dehomogenized out;
    out.form = Form(last, 1);
    for (const auto& [idx, p] : eta_tilde.components()) {
        if (static_cast<std::size_t>(idx.front()) == last) continue;
        const Poly q = p.dehomogenized(last);
        out.form.add_component(idx, q);
    }
    for (const auto& [idx, p] : out.form.components()) {
        for (const auto& [m, c] : p.terms()) out.degrees_present.insert(m.total_degree() + 1);
    }
    out.degree = total_degree(out.form);
    const Homogeneity h = total_degree(eta_tilde);
    out.expected_degree = h.is_homogeneous() ? h.degree - 1 : 0;
    return out;
}

bool descends(const Form& eta) {
    if (eta.arity() != 1) throw PreconditionError("descent is tested on one-forms");
    return contract(radial_field(eta.ambient_dim()), eta).is_zero();
}

bool verify_affine_def_lemma(const Form& omega, const Form& eta) {
    if (omega.arity() != 1 || eta.arity() != 1) throw PreconditionError("omega and eta must be one-forms");
    const Homogeneity h = total_degree(omega);
    if (!h.is_homogeneous()) throw PreconditionError("omega must be nonzero and homogeneous");
    const Homogeneity he = total_degree(eta);
    if (!he.is_zero() && he != h) throw PreconditionError("eta must be homogeneous of the degree of omega");
    if (!is_integrable(omega)) throw PreconditionError("omega must be integrable");
    if (!deform_operator(omega, eta).is_zero()) throw PreconditionError("eta is not a first-order deformation of omega");

    const Form omega_t = projectivize(omega, h.degree);
    const Form eta_t = projectivize(eta, h.degree);
    const bool forward = deform_operator(omega_t, eta_t).is_zero();

    const Dehomogenized omega_back = dehomogenize(omega_t);
    const Dehomogenized eta_back = dehomogenize(eta_t);
    const bool converse = forward && omega_back.form == omega && eta_back.form == eta &&
                          deform_operator(omega_back.form, eta_back.form).is_zero();
    return forward && converse;
}

ProjectivizedParameters projectivized_log_parameters(const FoliationSpec& spec) {
    if (!has_parameters(spec)) throw PreconditionError("projectivized parameters need a rational or logarithmic spec");
    const Form omega = realize(spec);
    const std::size_t n = omega.ambient_dim();
    const AffineLogarithmic data = as_logarithmic(spec);

    ProjectivizedParameters out;
    out.mu = mu_of(spec);
    for (const auto& f : data.f) out.data.f.push_back(f.extended(n + 1));
    out.data.f.push_back(Poly::variable(n + 1, n));
    out.data.lambda = data.lambda;
    out.data.lambda.push_back(-out.mu);
    out.generic_projectivization = !out.mu.is_zero();

    const Poly F = integrating_factor(spec).F.extended(n + 1);
    const Poly z = Poly::variable(n + 1, n);
    const Form expected = z * omega.extended(n + 1) - (out.mu * F) * Form::differential(n + 1, n);
    out.verified = realize(out.data) == expected && projectivize(omega, form_degree(spec)) == expected;
    return out;
}

SubspaceBasis projective_deformation_space(const Form& omega_tilde, int e) {
    if (omega_tilde.arity() != 1) throw PreconditionError("omega_tilde must be a one-form");
    const std::size_t n = omega_tilde.ambient_dim();
    if (n < 3) throw PreconditionError("projective deformations need at least three homogeneous variables");
    if (e < 1) throw PreconditionError("degree must be at least one");
    const Homogeneity h = total_degree(omega_tilde);
    if (!h.is_homogeneous()) throw PreconditionError("omega_tilde must be nonzero and homogeneous");
    if (!descends(omega_tilde)) throw PreconditionError("omega_tilde does not descend: i_R(omega_tilde) != 0");
    if (!is_integrable(omega_tilde)) throw PreconditionError("omega_tilde must be integrable");

    const FormSpace domain = FormSpace::one_forms(n, e);
    const VectorField radial = radial_field(n);
    Matrix constraints =
        assemble_matrix(domain, [&omega_tilde](const Form& eta) { return deform_operator(omega_tilde, eta); });
    constraints.append_rows(assemble_matrix(domain, [&radial](const Form& eta) { return contract(radial, eta); }));
    const Matrix kernel = nullspace(constraints);
    std::vector<Form> generators;
    for (std::size_t r = 0; r < kernel.rows(); ++r) generators.push_back(domain.form_of(kernel.row(r)));
    return SubspaceBasis::row_space(domain, kernel, std::move(generators),
                                    h.degree == e ? std::optional<Form>(omega_tilde) : std::nullopt);
}

} // namespace folia
