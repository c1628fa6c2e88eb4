#include "folia/deformation.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "folia/error.hpp"

namespace folia {

namespace {

Form differential_of(const Poly& p) { return ext_d(Form::function(p)); }

std::size_t first_nonzero(std::span<const Scalar> v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) return j;
    }
    return v.size();
}

std::vector<Scalar> project_along(std::span<const Scalar> v, std::span<const Scalar> w, std::size_t c) {
    std::vector<Scalar> out(v.begin(), v.end());
    if (out[c].is_zero()) return out;
    const Scalar factor = out[c] / w[c];
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (!w[j].is_zero()) out[j] -= factor * w[j];
    }
    return out;
}

void require_one_form(const Form& f, const char* what) {
    if (f.arity() != 1) throw PreconditionError(std::string(what) + " must be a one-form");
}

// Spec with slot i replaced by g.
FoliationSpec replace_parameter(const FoliationSpec& spec, std::size_t slot, const Poly& g) {
    if (const auto* r = std::get_if<AffineRational>(&spec)) {
        AffineRational out = *r;
        (slot == 0 ? out.f1 : out.f2) = g;
        return out;
    }
    AffineLogarithmic out = std::get<AffineLogarithmic>(spec);
    out.f[slot] = g;
    return out;
}

std::vector<Poly> parameters(const FoliationSpec& spec) { return as_logarithmic(spec).f; }

} // namespace

SubspaceBasis SubspaceBasis::span(const FormSpace& space, std::vector<Form> generators,
                                  std::optional<Form> quotient_by) {
    Matrix vectors(0, space.dimension());
    for (const auto& g : generators) {
        if (!space.contains(g)) throw PreconditionError("generator does not lie in the coordinate space");
        vectors.append_row(space.vector_of(g));
    }
    return row_space(space, vectors, std::move(generators), std::move(quotient_by));
}

SubspaceBasis SubspaceBasis::row_space(const FormSpace& space, const Matrix& vectors, std::vector<Form> generators,
                                       std::optional<Form> quotient_by) {
    if (vectors.cols() != space.dimension()) throw DimensionMismatch("vectors do not match the coordinate space");
    SubspaceBasis out;
    out.space_ = space;
    out.generators_ = std::move(generators);
    if (!quotient_by) {
        out.echelon_ = reduced_echelon(vectors);
        return out;
    }
    if (!space.contains(*quotient_by)) throw PreconditionError("quotient form does not lie in the coordinate space");
    const auto w = space.vector_of(*quotient_by);
    const std::size_t c = first_nonzero(w);
    if (c == w.size()) throw PreconditionError("cannot quotient by the zero form");
    Matrix projected(0, vectors.cols());
    for (std::size_t r = 0; r < vectors.rows(); ++r) projected.append_row(project_along(vectors.row(r), w, c));
    out.echelon_ = reduced_echelon(projected);
    out.quotient_by_ = std::move(quotient_by);
    out.quotient_column_ = c;
    return out;
}

std::vector<Form> SubspaceBasis::basis() const {
    std::vector<Form> out;
    out.reserve(dimension());
    for (std::size_t r = 0; r < echelon_.rref.rows(); ++r) out.push_back(space_.form_of(echelon_.rref.row(r)));
    return out;
}

bool SubspaceBasis::contains(const Form& f) const {
    if (!space_.contains(f)) return false;
    auto v = space_.vector_of(f);
    if (quotient_by_) v = project_along(v, space_.vector_of(*quotient_by_), *quotient_column_);
    return in_row_space(echelon_, v);
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.space_ == b.space_ && a.quotient_by_ == b.quotient_by_ && a.echelon_.rref == b.echelon_.rref;
}

Form deform_operator(const Form& omega, const Form& eta) {
    if (omega.ambient_dim() != eta.ambient_dim()) throw DimensionMismatch("omega and eta differ in dimension");
    return wedge(omega, ext_d(eta)) + wedge(ext_d(omega), eta);
}

Form relcohom_operator(const Form& omega, const Poly& F, const Form& eta) {
    if (omega.ambient_dim() != eta.ambient_dim() || F.ambient_dim() != eta.ambient_dim()) {
        throw DimensionMismatch("omega, F and eta differ in dimension");
    }
    const Form inner = F * ext_d(eta) - wedge(differential_of(F), eta);
    return wedge(inner, omega);
}

KernelOperator KernelOperator::deform(Form omega) {
    require_one_form(omega, "omega");
    KernelOperator op;
    op.kind_ = Kind::deform;
    op.omega_ = std::move(omega);
    return op;
}

KernelOperator KernelOperator::relcohom(Form omega, Poly F) {
    require_one_form(omega, "omega");
    if (F.is_zero()) throw PreconditionError("the relative cohomology factor must be nonzero");
    if (F.ambient_dim() != omega.ambient_dim()) throw DimensionMismatch("F and omega differ in dimension");
    KernelOperator op;
    op.kind_ = Kind::relcohom;
    op.omega_ = std::move(omega);
    op.F_ = std::move(F);
    return op;
}

KernelOperator KernelOperator::relcohom_for(const FoliationSpec& spec) {
    if (!has_parameters(spec)) {
        throw PreconditionError("relative cohomology needs a rational or logarithmic spec (no canonical F)");
    }
    return relcohom(realize(spec), integrating_factor(spec).F);
}

Form KernelOperator::apply(const Form& eta) const {
    if (kind_ == Kind::deform) return deform_operator(omega_, eta);
    return relcohom_operator(omega_, *F_, eta);
}

Matrix assemble_matrix(const FormSpace& domain, const std::function<Form(const Form&)>& op) {
    const std::size_t cols = domain.dimension();
    std::vector<Form> images(cols);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(cols, 1));
    if (workers <= 1 || cols < 16) {
        for (std::size_t j = 0; j < cols; ++j) images[j] = op(domain.basis_form(j));
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t j = w; j < cols; j += workers) images[j] = op(domain.basis_form(j));
            });
        }
    }
    return coefficient_columns(images);
}

SubspaceBasis kernel_space(const KernelOperator& op, int e, bool quotient_by_omega) {
    const Form& omega = op.omega();
    if (e < 1) throw PreconditionError("kernel degree must be at least one");
    const Homogeneity h = total_degree(omega);
    if (!h.is_homogeneous()) throw PreconditionError("omega must be nonzero and homogeneous");
    if (!is_integrable(omega)) throw PreconditionError("omega must be integrable");
    if (quotient_by_omega && h.degree != e) {
        throw PreconditionError("quotient by omega requested at a degree different from deg omega");
    }
    const FormSpace domain = FormSpace::one_forms(omega.ambient_dim(), e);
    const Matrix m = assemble_matrix(domain, [&op](const Form& eta) { return op.apply(eta); });
    const Matrix kernel = nullspace(m);
    std::vector<Form> generators;
    for (std::size_t r = 0; r < kernel.rows(); ++r) generators.push_back(domain.form_of(kernel.row(r)));
    return SubspaceBasis::row_space(domain, kernel, std::move(generators),
                                    quotient_by_omega ? std::optional<Form>(omega) : std::nullopt);
}

SubspaceBasis param_perturbation_space(const FoliationSpec& spec, const ParamOptions& options) {
    if (!has_parameters(spec)) throw PreconditionError("parameter perturbations need a rational or logarithmic spec");
    validate(spec);
    const auto params = parameters(spec);
    const std::size_t n = ambient_dim(spec);
    const int e = form_degree(spec);

    std::vector<int> degrees;
    for (const auto& f : params) degrees.push_back(homogeneous_degree(f).degree);
    std::vector<int> targets = options.target_degrees.value_or(degrees);
    if (targets.size() != params.size()) throw PreconditionError("one target degree per parameter slot is required");
    std::vector<std::size_t> slots;
    if (options.slots) {
        slots = *options.slots;
    } else {
        for (std::size_t i = 0; i < params.size(); ++i) slots.push_back(i);
    }
    if (slots.empty()) throw PreconditionError("no parameter slot selected");

    std::optional<int> out_degree;
    std::vector<Form> generators;
    for (std::size_t slot : slots) {
        if (slot >= params.size()) throw PreconditionError("parameter slot out of range");
        const int target = targets[slot];
        if (target < 0) throw PreconditionError("empty monomial basis: negative target degree");
        if (target == 0) {
            throw PreconditionError("a constant replacement is the different-degree construction, not a parameter perturbation");
        }
        const int degree = e - degrees[slot] + target;
        if (out_degree && *out_degree != degree) throw PreconditionError("selected slots produce forms of different degrees");
        out_degree = degree;
        for (const auto& m : monomials_of_degree(n, target)) {
            generators.push_back(realize(replace_parameter(spec, slot, Poly::term(m, Scalar(1)))));
        }
    }
    const FormSpace space = FormSpace::one_forms(n, *out_degree);
    const bool quotient = options.quotient && *out_degree == e;
    return SubspaceBasis::span(space, std::move(generators),
                               quotient ? std::optional<Form>(realize(spec)) : std::nullopt);
}

SubspaceBasis eigen_perturbation_space(const FoliationSpec& spec, bool quotient) {
    if (!has_parameters(spec)) throw PreconditionError("eigenvalue perturbations need a rational or logarithmic spec");
    const AffineLogarithmic data = as_logarithmic(spec);
    std::vector<Form> generators;
    for (std::size_t k = 0; k < data.f.size(); ++k) {
        AffineLogarithmic unit = data;
        std::fill(unit.lambda.begin(), unit.lambda.end(), Scalar());
        unit.lambda[k] = Scalar(1);
        generators.push_back(realize(unit));
    }
    const FormSpace space = FormSpace::one_forms(ambient_dim(spec), form_degree(spec));
    return SubspaceBasis::span(space, std::move(generators),
                               quotient ? std::optional<Form>(realize(spec)) : std::nullopt);
}

SubspaceBasis exact_perturbation_space(const Exact& spec, bool quotient) {
    const int e = form_degree(spec);
    const std::size_t n = spec.p.ambient_dim();
    std::vector<Form> generators;
    for (const auto& m : monomials_of_degree(n, e)) generators.push_back(differential_of(Poly::term(m, Scalar(1))));
    return SubspaceBasis::span(FormSpace::one_forms(n, e), std::move(generators),
                               quotient ? std::optional<Form>(realize(spec)) : std::nullopt);
}

std::string to_string(DecompositionVerdict v) {
    switch (v) {
    case DecompositionVerdict::direct_sum_equal: return "direct_sum_equal";
    case DecompositionVerdict::proper_subspace: return "proper_subspace";
    case DecompositionVerdict::mismatch: return "mismatch";
    }
    return "unknown";
}

DeformationReport verify_decomposition(const FoliationSpec& spec, int trials, std::uint64_t seed) {
    if (std::holds_alternative<Raw>(spec)) throw PreconditionError("decomposition needs a rational, logarithmic or exact spec");
    validate(spec);
    DeformationReport report;
    report.ambient_dim = ambient_dim(spec);
    report.e = form_degree(spec);
    const Form omega = realize(spec);

    if (const auto* exact = std::get_if<Exact>(&spec)) {
        report.kind = "exact";
        report.within_hypotheses = exact_hypothesis_check(exact->p, trials, seed) == Verdict::generic;
        report.param = exact_perturbation_space(*exact);
        report.eigen = SubspaceBasis::span(report.param.space(), {}, omega);
        report.sum = report.param;
    } else {
        report.kind = is_rational(spec) ? "rational" : "logarithmic";
        report.genericity = genericity_check(spec, trials, seed);
        report.mu = report.genericity->mu;
        const auto lambda = as_logarithmic(spec).lambda;
        const bool minus_mu_new = std::find(lambda.begin(), lambda.end(), -*report.mu) == lambda.end();
        report.within_hypotheses =
            report.genericity->verdict == Verdict::generic && report.genericity->mu_nonzero && minus_mu_new;
        report.param = param_perturbation_space(spec);
        report.eigen = eigen_perturbation_space(spec);
        std::vector<Form> all = report.param.generators();
        all.insert(all.end(), report.eigen.generators().begin(), report.eigen.generators().end());
        report.sum = SubspaceBasis::span(report.param.space(), std::move(all), omega);
    }

    report.kernel = kernel_space(KernelOperator::deform(omega), report.e, true);
    report.dim_kernel = report.kernel.dimension();
    report.dim_param = report.param.dimension();
    report.dim_eigen = report.eigen.dimension();
    report.dim_sum = report.sum.dimension();

    for (const auto& b : report.kernel.basis()) {
        if (!report.sum.contains(b)) report.witnesses.push_back(b);
    }
    bool sum_inside = true;
    for (const auto& b : report.sum.basis()) {
        if (!report.kernel.contains(b)) sum_inside = false;
    }
    if (report.kernel == report.sum && report.dim_sum == report.dim_param + report.dim_eigen) {
        report.decomposition_verdict = DecompositionVerdict::direct_sum_equal;
    } else if (sum_inside && report.dim_sum < report.dim_kernel) {
        report.decomposition_verdict = DecompositionVerdict::proper_subspace;
    } else {
        report.decomposition_verdict = DecompositionVerdict::mismatch;
    }
    return report;
}

bool verify_coro1(const FoliationSpec& spec) {
    const int e = form_degree(spec);
    const KernelOperator relcohom = KernelOperator::relcohom_for(spec);
    const SubspaceBasis deform_kernel = kernel_space(KernelOperator::deform(realize(spec)), e, false);
    const SubspaceBasis relcohom_kernel = kernel_space(relcohom, e, false);
    return deform_kernel == relcohom_kernel;
}

bool verify_forward_implication(const FoliationSpec& spec, int d) {
    const KernelOperator relcohom = KernelOperator::relcohom_for(spec);
    const SubspaceBasis kernel = kernel_space(KernelOperator::deform(realize(spec)), d, false);
    return std::ranges::all_of(kernel.basis(), [&](const Form& eta) { return relcohom.apply(eta).is_zero(); });
}

Form different_degree_solution(const FoliationSpec& spec, const std::vector<std::size_t>& subset) {
    if (!has_parameters(spec)) throw PreconditionError("different-degree solutions need a rational or logarithmic spec");
    validate(spec);
    const AffineLogarithmic data = as_logarithmic(spec);
    const std::size_t s = data.f.size();
    const std::set<std::size_t> unique(subset.begin(), subset.end());
    if (subset.size() != s - 1 || unique.size() != subset.size() || *unique.rbegin() >= s) {
        throw PreconditionError("the index subset must hold s - 1 distinct slots");
    }
    const std::size_t n = ambient_dim(spec);

    Form eta(n, 1);
    if (is_rational(spec)) {
        eta = differential_of(data.f[subset.front()]);
    } else {
        for (std::size_t j : unique) {
            Poly fbar = Poly::constant(n, Scalar(1));
            for (std::size_t i : unique) {
                if (i != j) fbar = fbar * data.f[i];
            }
            eta += data.lambda[j] * (fbar * differential_of(data.f[j]));
        }
    }
    const KernelOperator relcohom = KernelOperator::relcohom_for(spec);
    if (!relcohom.apply(eta).is_zero()) {
        throw InternalError("constructed different-degree solution does not solve the relative cohomology equation");
    }
    return eta;
}

DicriticalResult dicritical_classify(const Form& omega, const Form& eta, const std::optional<Factorization>& factorization) {
    require_one_form(omega, "omega");
    require_one_form(eta, "eta");
    if (omega.ambient_dim() != eta.ambient_dim()) throw DimensionMismatch("omega and eta differ in dimension");
    const std::size_t n = omega.ambient_dim();
    const VectorField radial = radial_field(n);
    if (!contract(radial, omega).is_zero()) throw PreconditionError("omega is not dicritical: i_R(omega) != 0");
    const Homogeneity h_omega = total_degree(omega);
    const Homogeneity h_eta = total_degree(eta);
    if (!h_omega.is_homogeneous()) throw PreconditionError("omega must be nonzero and homogeneous");
    if (!h_eta.is_zero() && h_eta != h_omega) throw PreconditionError("eta must be homogeneous of the degree of omega");
    if (!is_integrable(omega)) throw PreconditionError("omega must be integrable");
    if (!deform_operator(omega, eta).is_zero()) throw PreconditionError("eta is not a first-order deformation of omega");

    DicriticalResult out;
    out.F = contract(radial, eta).as_function();
    if (out.F.is_zero()) {
        out.descends = true;
        return out;
    }
    out.omega_over_F_closed = is_integrating_factor(out.F, omega);
    out.eta_over_F_closed = is_integrating_factor(out.F, eta);
    if (!factorization) return out;

    Poly product = Poly::constant(n, Scalar(1));
    for (std::size_t i = 0; i < factorization->factors.size(); ++i) {
        if (i >= factorization->mult.size() || factorization->mult[i] < 1) {
            throw PreconditionError("one positive multiplicity per factor is required");
        }
        product = product * pow(factorization->factors[i], static_cast<unsigned>(factorization->mult[i]));
    }
    const auto unit = exact_divide(out.F, product);
    if (!unit || unit->is_zero() || homogeneous_degree(*unit).degree != 0) {
        throw PreconditionError("the factorization does not match i_R(eta) up to a constant");
    }
    const Scalar c = unit->constant_term();
    if (out.omega_over_F_closed) {
        out.omega_decomposition = integration_lemma_decompose(omega, factorization->factors, factorization->mult, c);
    }
    if (out.eta_over_F_closed) {
        out.eta_decomposition = integration_lemma_decompose(eta, factorization->factors, factorization->mult, c);
    }
    return out;
}

} // namespace folia
