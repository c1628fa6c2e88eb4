#include "cli.hpp"

#include <chrono>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "folia/error.hpp"
#include "folia/expression.hpp"
#include "folia/projective.hpp"
#include "folia/selftest.hpp"

namespace folia::cli {

namespace {

struct Options {
    std::string subcommand;
    std::string theorem;
    std::string vars;
    std::string spec;
    std::vector<std::string> f;
    std::vector<std::string> eigen;
    std::vector<std::string> factor;
    std::vector<int> mult;
    std::string form;
    std::string eta;
    std::string unit;
    int degree = 0;
    bool has_degree = false;
    bool quotient = true;
    bool has_quotient = false;
    std::uint64_t seed = 0;
    bool has_seed = false;
    int trials = 5;
    int instances = 0;
    std::string output;
};

// Errors in the command line itself (as opposed to the mathematics).
struct UsageError : Error {
    using Error::Error;
};

const std::vector<std::string> kDefaultNames = Variables::defaults(11).names();

// Without --vars: the default names x, y, z, ... up to the last one used,
// and at least three.
Variables infer_variables(const Options& o) {
    if (!o.vars.empty()) return Variables::parse_list(o.vars);
    std::size_t n = 3;
    auto scan = [&n](const std::string& text) {
        std::size_t i = 0;
        while (i < text.size()) {
            if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            std::string word = text.substr(i, j - i);
            if (word.size() > 1 && word.front() == 'd') word = word.substr(1);
            for (std::size_t k = 0; k < kDefaultNames.size(); ++k) {
                if (kDefaultNames[k] == word) n = std::max(n, k + 1);
            }
            i = j;
        }
    };
    for (const auto& t : o.f) scan(t);
    for (const auto& t : o.factor) scan(t);
    scan(o.form);
    scan(o.eta);
    return Variables::defaults(n);
}

std::vector<Poly> parse_polys(const std::vector<std::string>& texts, const Variables& v) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(parse_poly(t, v));
    return out;
}

std::vector<Scalar> parse_scalars(const std::vector<std::string>& texts) {
    std::vector<Scalar> out;
    for (const auto& t : texts) out.push_back(parse_scalar(t));
    return out;
}

std::string kind_of(const FoliationSpec& spec) {
    switch (spec.index()) {
    case 0: return "rational";
    case 1: return "logarithmic";
    case 2: return "exact";
    default: return "form";
    }
}

FoliationSpec build_spec(const Options& o, const Variables& v, const std::string& implied = "") {
    std::string kind = o.spec;
    if (!implied.empty()) {
        if (!kind.empty() && kind != implied) throw UsageError("--spec " + kind + " conflicts with theorem " + implied);
        kind = implied;
    }
    if (kind.empty()) {
        if (o.form.empty()) throw UsageError("no foliation given: use --spec with --f/--eigen, or --form");
        kind = "form";
    }
    FoliationSpec spec;
    if (kind == "rational") {
        if (o.f.size() != 2 || o.eigen.size() != 2) throw UsageError("rational needs two --f and two --eigen (r, s)");
        spec = AffineRational{parse_poly(o.f[0], v), parse_poly(o.f[1], v), parse_scalar(o.eigen[0]),
                              parse_scalar(o.eigen[1])};
    } else if (kind == "logarithmic") {
        if (o.f.size() < 2 || o.f.size() != o.eigen.size()) {
            throw UsageError("logarithmic needs at least two --f and one --eigen per factor");
        }
        spec = AffineLogarithmic{parse_polys(o.f, v), parse_scalars(o.eigen)};
    } else if (kind == "exact") {
        if (o.f.size() != 1 || !o.eigen.empty()) throw UsageError("exact needs exactly one --f (the polynomial P)");
        spec = Exact{parse_poly(o.f[0], v)};
    } else if (kind == "form") {
        if (o.form.empty()) throw UsageError("--spec form needs --form");
        spec = Raw{parse_form(o.form, v)};
    } else {
        throw UsageError("unknown spec kind '" + kind + "'");
    }
    validate(spec);
    return spec;
}

std::uint64_t require_seed(const Options& o) {
    if (!o.has_seed) throw UsageError("--seed is required when probabilistic checks run");
    return o.seed;
}

Json render_all(const std::vector<Form>& forms, const Variables& v) {
    Json out = Json::array();
    for (const auto& f : forms) out.push_back(render(f, v));
    return out;
}

Json scalars_json(const std::vector<Scalar>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

Json subspace_json(const SubspaceBasis& s, const Variables& v) {
    Json out;
    out["degree"] = s.degree();
    out["quotient_by_omega"] = s.quotient_by().has_value();
    out["dimension"] = s.dimension();
    out["basis"] = render_all(s.basis(), v);
    return out;
}

Json genericity_json(const GenericityReport& g) {
    Json out;
    out["verdict"] = to_string(g.verdict);
    out["eigenvalues_ok"] = g.eigenvalues_ok;
    out["normal_crossings_ok"] = g.normal_crossings_ok;
    out["mu"] = g.mu.to_string();
    out["mu_nonzero"] = g.mu_nonzero;
    out["trials_used"] = g.trials_used;
    out["trials_with_zeros"] = g.trials_with_zeros;
    out["trials_failed"] = g.trials_failed;
    out["primes"] = g.primes;
    return out;
}

Json decomposition_json(const IntegrationLemmaResult& r, const Variables& v) {
    Json out;
    out["lambda"] = scalars_json(r.lambda);
    out["g"] = render(r.g, v);
    out["residual_ok"] = r.residual_ok;
    return out;
}

Json echo(const Options& o, const Variables& v) {
    Json c;
    c["subcommand"] = o.subcommand;
    if (!o.theorem.empty()) c["theorem"] = o.theorem;
    c["vars"] = v.names();
    if (!o.spec.empty()) c["spec"] = o.spec;
    if (!o.f.empty()) {
        Json fs = Json::array();
        for (const auto& t : o.f) fs.push_back(render(parse_poly(t, v), v));
        c["f"] = fs;
    }
    if (!o.eigen.empty()) c["eigen"] = scalars_json(parse_scalars(o.eigen));
    if (!o.form.empty()) c["form"] = render(parse_form(o.form, v), v);
    if (!o.eta.empty()) c["eta"] = render(parse_form(o.eta, v), v);
    if (!o.factor.empty()) {
        Json fs = Json::array();
        for (const auto& t : o.factor) fs.push_back(render(parse_poly(t, v), v));
        c["factor"] = fs;
    }
    if (!o.mult.empty()) c["mult"] = o.mult;
    if (!o.unit.empty()) c["unit"] = parse_scalar(o.unit).to_string();
    if (o.has_degree) c["degree"] = o.degree;
    if (o.has_quotient) c["quotient"] = o.quotient;
    if (o.instances > 0) c["instances"] = o.instances;
    return c;
}

struct Run {
    Json result;
    int exit_code = kSuccess;
    bool seeded = false;
};

// Degree to work at and whether to quotient by C.omega there.
std::pair<int, bool> degree_and_quotient(const Options& o, int e) {
    const int d = o.has_degree ? o.degree : e;
    if (d < 1) throw UsageError("--degree must be at least 1");
    if (o.has_quotient && o.quotient && d != e) {
        throw UsageError("--quotient needs --degree equal to the degree of omega");
    }
    return {d, o.has_quotient ? o.quotient : d == e};
}

Run cmd_check(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    const Form omega = realize(spec);
    Run run;
    Json& r = run.result;
    r["kind"] = kind_of(spec);
    r["ambient_dim"] = v.size();
    r["omega"] = render(omega, v);
    r["degree"] = form_degree(spec);
    const bool integrable = is_integrable(omega);
    r["integrable"] = integrable;
    bool ok = integrable;
    if (has_parameters(spec)) {
        const IntegratingFactor f = integrating_factor(spec);
        r["integrating_factor"] = {{"F", render(f.F, v)}, {"verified", f.verified}};
        r["mu"] = mu_of(spec).to_string();
        const GenericityReport g = genericity_check(spec, o.trials, require_seed(o));
        run.seeded = true;
        r["genericity"] = genericity_json(g);
        ok = ok && f.verified && g.verdict != Verdict::not_generic;
    } else if (std::holds_alternative<Exact>(spec)) {
        const Verdict h = exact_hypothesis_check(std::get<Exact>(spec).p, o.trials, require_seed(o));
        run.seeded = true;
        r["singular_locus_codim_ge_3"] = to_string(h);
        ok = ok && h != Verdict::not_generic;
    }
    r["status"] = ok ? "pass" : "fail";
    run.exit_code = ok ? kSuccess : kVerdictFailure;
    return run;
}

Run cmd_kernel(const Options& o, const Variables& v, bool relcohom) {
    const FoliationSpec spec = build_spec(o, v);
    const Form omega = realize(spec);
    KernelOperator op = KernelOperator::deform(omega);
    Run run;
    if (relcohom) {
        if (has_parameters(spec)) {
            op = KernelOperator::relcohom_for(spec);
        } else {
            if (o.factor.size() != 1) throw UsageError("relcohom on a bare form needs one --factor (the integrating factor F)");
            op = KernelOperator::relcohom(omega, parse_poly(o.factor.front(), v));
        }
        run.result["F"] = render(*op.factor(), v);
    }
    const auto [d, quotient] = degree_and_quotient(o, form_degree(spec));
    run.result["omega"] = render(omega, v);
    run.result["kernel"] = subspace_json(kernel_space(op, d, quotient), v);
    return run;
}

Run cmd_projectivize(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    const Form omega = realize(spec);
    const int e = o.has_degree ? o.degree : form_degree(spec);
    const Variables vt = v.extended();
    const Form tilde = projectivize(omega, e);
    const Dehomogenized back = dehomogenize(tilde);
    Run run;
    Json& r = run.result;
    r["vars"] = vt.names();
    r["omega"] = render(omega, v);
    r["projectivized"] = render(tilde, vt);
    r["degree"] = e + 1;
    r["descends"] = descends(tilde);
    r["round_trip"] = back.form == omega;
    bool ok = descends(tilde) && back.form == omega;
    if (has_parameters(spec)) {
        const ProjectivizedParameters p = projectivized_log_parameters(spec);
        Json fs = Json::array();
        for (const auto& f : p.data.f) fs.push_back(render(f, vt));
        r["parameters"] = {{"f", fs},
                           {"lambda", scalars_json(p.data.lambda)},
                           {"mu", p.mu.to_string()},
                           {"verified", p.verified},
                           {"generic_projectivization", p.generic_projectivization}};
        ok = ok && p.verified;
    }
    r["status"] = ok ? "pass" : "fail";
    run.exit_code = ok ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_decomposition_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v, o.theorem);
    const DeformationReport d = verify_decomposition(spec, o.trials, require_seed(o));
    Run run;
    run.seeded = true;
    Json& r = run.result;
    r["kind"] = d.kind;
    r["omega"] = render(realize(spec), v);
    r["e"] = d.e;
    if (d.mu) r["mu"] = d.mu->to_string();
    if (d.genericity) r["genericity"] = genericity_json(*d.genericity);
    r["within_hypotheses"] = d.within_hypotheses;
    r["dim_kernel"] = d.dim_kernel;
    r["dim_param"] = d.dim_param;
    r["dim_eigen"] = d.dim_eigen;
    r["dim_sum"] = d.dim_sum;
    r["kernel"] = subspace_json(d.kernel, v);
    r["param"] = subspace_json(d.param, v);
    r["eigen"] = subspace_json(d.eigen, v);
    r["verdict"] = to_string(d.decomposition_verdict);
    r["witnesses"] = render_all(d.witnesses, v);
    run.exit_code = d.decomposition_verdict == DecompositionVerdict::direct_sum_equal ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_coro1_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    if (!has_parameters(spec)) throw UsageError("coro1 needs a rational or logarithmic spec");
    const int e = form_degree(spec);
    Run run;
    run.result["omega"] = render(realize(spec), v);
    run.result["degree"] = e;
    run.result["dim_deform"] = kernel_space(KernelOperator::deform(realize(spec)), e, false).dimension();
    run.result["dim_relcohom"] = kernel_space(KernelOperator::relcohom_for(spec), e, false).dimension();
    const bool equal = verify_coro1(spec);
    run.result["kernels_equal"] = equal;
    run.exit_code = equal ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_prop2_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    if (!has_parameters(spec)) throw UsageError("prop2 needs a rational or logarithmic spec");
    const int e = form_degree(spec);
    std::vector<int> degrees;
    if (o.has_degree) {
        degrees.push_back(o.degree);
    } else {
        for (int d = std::max(1, e - 1); d <= e + 2; ++d) degrees.push_back(d);
    }
    Run run;
    run.result["omega"] = render(realize(spec), v);
    Json checks = Json::array();
    bool all = true;
    for (int d : degrees) {
        const bool holds = verify_forward_implication(spec, d);
        all = all && holds;
        const std::size_t dim = kernel_space(KernelOperator::deform(realize(spec)), d, false).dimension();
        checks.push_back({{"degree", d}, {"dim_kernel", dim}, {"holds", holds}});
    }
    run.result["checks"] = checks;
    run.exit_code = all ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_affine_def_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    const Form omega = realize(spec);
    const int e = form_degree(spec);
    std::vector<Form> etas;
    if (!o.eta.empty()) {
        etas.push_back(parse_form(o.eta, v));
    } else {
        etas = kernel_space(KernelOperator::deform(omega), e, false).basis();
    }
    Run run;
    run.result["omega"] = render(omega, v);
    run.result["projectivized_omega"] = render(projectivize(omega, e), v.extended());
    Json checks = Json::array();
    bool all = true;
    for (const auto& eta : etas) {
        const bool holds = verify_affine_def_lemma(omega, eta);
        all = all && holds;
        checks.push_back({{"eta", render(eta, v)}, {"holds", holds}});
    }
    run.result["checks"] = checks;
    run.exit_code = all ? kSuccess : kVerdictFailure;
    return run;
}

std::optional<Factorization> factorization_of(const Options& o, const Variables& v) {
    if (o.factor.empty()) {
        if (!o.mult.empty()) throw UsageError("--mult needs --factor");
        return std::nullopt;
    }
    Factorization fac{parse_polys(o.factor, v), o.mult};
    if (fac.mult.empty()) fac.mult.assign(fac.factors.size(), 1);
    if (fac.mult.size() != fac.factors.size()) throw UsageError("one --mult per --factor");
    return fac;
}

Run verify_dicritical_cmd(const Options& o, const Variables& v) {
    if (o.form.empty() || o.eta.empty()) throw UsageError("dicritical needs --form and --eta");
    const Form omega = parse_form(o.form, v);
    const Form eta = parse_form(o.eta, v);
    const DicriticalResult d = dicritical_classify(omega, eta, factorization_of(o, v));
    Run run;
    Json& r = run.result;
    r["omega"] = render(omega, v);
    r["eta"] = render(eta, v);
    bool ok = true;
    if (d.descends) {
        r["outcome"] = "descends";
    } else {
        r["outcome"] = "integrating_factor";
        r["F"] = render(d.F, v);
        r["omega_over_F_closed"] = d.omega_over_F_closed;
        r["eta_over_F_closed"] = d.eta_over_F_closed;
        ok = d.omega_over_F_closed && d.eta_over_F_closed;
        if (d.omega_decomposition) {
            r["omega_decomposition"] = decomposition_json(*d.omega_decomposition, v);
            ok = ok && d.omega_decomposition->residual_ok;
        }
        if (d.eta_decomposition) {
            r["eta_decomposition"] = decomposition_json(*d.eta_decomposition, v);
            ok = ok && d.eta_decomposition->residual_ok;
        }
    }
    run.exit_code = ok ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_different_degree_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    if (!has_parameters(spec)) throw UsageError("different-degree needs a rational or logarithmic spec");
    const std::size_t s = as_logarithmic(spec).f.size();
    Run run;
    run.result["omega"] = render(realize(spec), v);
    Json checks = Json::array();
    bool all = true;
    // Subsets of size s - 1: drop one slot at a time, in increasing order of the kept slots.
    for (std::size_t k = s; k-- > 0;) {
        std::vector<std::size_t> subset;
        Json slots = Json::array();
        for (std::size_t j = 0; j < s; ++j) {
            if (j == k) continue;
            subset.push_back(j);
            slots.push_back(j + 1);
        }
        Json entry = {{"J", slots}};
        try {
            entry["eta"] = render(different_degree_solution(spec, subset), v);
            entry["holds"] = true;
        } catch (const InternalError& ex) {
            entry["holds"] = false;
            entry["detail"] = ex.what();
            all = false;
        }
        checks.push_back(entry);
    }
    run.result["checks"] = checks;
    run.exit_code = all ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_projective_cmd(const Options& o, const Variables& v) {
    const FoliationSpec spec = build_spec(o, v);
    Run run;
    Json& r = run.result;
    if (const auto* ex = std::get_if<Exact>(&spec)) {
        // z dP - e P dz is rational of type (1, e); compare with the
        // perturbations of its two parameters.
        const int e = form_degree(spec);
        const Variables vt = v.extended();
        const std::size_t n = vt.size();
        const Form tilde = projectivize(realize(spec), e);
        const int d = o.has_degree ? o.degree : e + 1;
        const SubspaceBasis space = projective_deformation_space(tilde, d);
        r["vars"] = vt.names();
        r["omega_tilde"] = render(tilde, vt);
        r["space"] = subspace_json(space, vt);
        if (d == e + 1) {
            const Poly p = ex->p.extended(n);
            const Poly z = Poly::variable(n, n - 1);
            std::vector<Form> gens;
            for (const auto& m : monomials_of_degree(n, e)) {
                const Poly q = Poly::term(m, Scalar(1));
                gens.push_back(z * ext_d(Form::function(q)) - (Scalar(e) * q) * Form::differential(n, n - 1));
            }
            for (std::size_t i = 0; i < n; ++i) {
                gens.push_back(Poly::variable(n, i) * ext_d(Form::function(p)) -
                               (Scalar(e) * p) * Form::differential(n, i));
            }
            const SubspaceBasis expected = SubspaceBasis::span(FormSpace::one_forms(n, d), gens, tilde);
            r["parameter_span_dimension"] = expected.dimension();
            r["equal_to_parameter_span"] = expected == space;
            run.exit_code = expected == space ? kSuccess : kVerdictFailure;
        }
        return run;
    }
    if (!std::holds_alternative<Raw>(spec)) throw UsageError("projective needs an exact spec or --form");
    const Form tilde = realize(spec);
    const int d = o.has_degree ? o.degree : form_degree(spec);
    r["omega_tilde"] = render(tilde, v);
    r["space"] = subspace_json(projective_deformation_space(tilde, d), v);
    return run;
}

Run verify_identities_cmd(const Options& o) {
    const int instances = o.instances > 0 ? o.instances : 500;
    const IdentitySuiteResult s = exterior_identity_suite(instances, require_seed(o));
    Run run;
    run.seeded = true;
    run.result["instances"] = s.instances;
    Json ids = Json::array();
    for (const auto& t : s.identities) ids.push_back({{"identity", t.name}, {"checked", t.checked}, {"passed", t.passed}});
    run.result["identities"] = ids;
    run.result["all_passed"] = s.all_passed();
    run.exit_code = s.all_passed() ? kSuccess : kVerdictFailure;
    return run;
}

Run verify_integrating_factor_cmd(const Options& o, const Variables& v) {
    Run run;
    if (!o.spec.empty() || !o.form.empty()) {
        const FoliationSpec spec = build_spec(o, v);
        if (!has_parameters(spec)) throw UsageError("integrating-factor needs a rational or logarithmic spec");
        const IntegratingFactor f = integrating_factor(spec);
        run.result["omega"] = render(realize(spec), v);
        run.result["F"] = render(f.F, v);
        run.result["verified"] = f.verified;
        run.exit_code = f.verified ? kSuccess : kVerdictFailure;
        return run;
    }
    const int specs = o.instances > 0 ? o.instances : 100;
    const FactorSuiteResult s = integrating_factor_suite(specs, require_seed(o));
    run.seeded = true;
    run.result["specs"] = s.specs;
    run.result["rational"] = s.rational;
    run.result["logarithmic"] = s.logarithmic;
    run.result["passed"] = s.passed;
    run.result["failures"] = render_all(s.failures, Variables::defaults(3));
    run.exit_code = s.all_passed() ? kSuccess : kVerdictFailure;
    return run;
}

Run cmd_verify(const Options& o, const Variables& v) {
    const std::string& t = o.theorem;
    if (t == "rational" || t == "logarithmic" || t == "exact") return verify_decomposition_cmd(o, v);
    if (t == "coro1") return verify_coro1_cmd(o, v);
    if (t == "prop2") return verify_prop2_cmd(o, v);
    if (t == "affine-def") return verify_affine_def_cmd(o, v);
    if (t == "dicritical") return verify_dicritical_cmd(o, v);
    if (t == "different-degree") return verify_different_degree_cmd(o, v);
    if (t == "projective") return verify_projective_cmd(o, v);
    if (t == "identities") return verify_identities_cmd(o);
    if (t == "integrating-factor") return verify_integrating_factor_cmd(o, v);
    throw UsageError("unknown theorem '" + t + "'");
}

Run cmd_decompose(const Options& o, const Variables& v) {
    if (o.form.empty() || o.factor.empty()) throw UsageError("decompose needs --form and at least one --factor");
    const Form omega = parse_form(o.form, v);
    const Factorization fac = *factorization_of(o, v);
    const Scalar unit = o.unit.empty() ? Scalar(1) : parse_scalar(o.unit);
    const IntegrationLemmaResult r = integration_lemma_decompose(omega, fac.factors, fac.mult, unit);
    Run run;
    run.result = decomposition_json(r, v);
    run.exit_code = r.residual_ok ? kSuccess : kVerdictFailure;
    return run;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--vars", o.vars, "Comma-separated variable names (default x,y,z,... as used, at least three)");
    sub->add_option("--spec", o.spec, "Foliation kind")->check(CLI::IsMember({"rational", "logarithmic", "exact", "form"}));
    sub->add_option("--f", o.f, "Polynomial parameter (repeat; exact: the polynomial P)");
    sub->add_option("--eigen", o.eigen, "Eigenvalue (repeat; rational: r then s)");
    sub->add_option("--form", o.form, "One-form, e.g. \"x*dy - 2*y*dx\"");
    sub->add_option("--output", o.output, "Write the report to this file");
    sub->add_option("--trials", o.trials, "Trials for probabilistic checks")->check(CLI::PositiveNumber);
    sub->add_option_function<std::uint64_t>(
        "--seed", [&o](const std::uint64_t& s) { o.seed = s, o.has_seed = true; }, "Seed for probabilistic checks");
}

void add_degree(CLI::App* sub, Options& o) {
    sub->add_option_function<int>("--degree", [&o](const int& d) { o.degree = d, o.has_degree = true; },
                                  "Total degree of the perturbations");
}

void add_quotient(CLI::App* sub, Options& o) {
    sub->add_flag_function(
        "--quotient,!--no-quotient",
        [&o](std::int64_t count) { o.quotient = count > 0, o.has_quotient = true; },
        "Quotient by C.omega (default: only when the degrees match)");
}

void write_report(const Json& report, const Options& o, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + o.output + "'");
    file << text;
}

} // namespace

Json payload(Json report) {
    report.erase("timing");
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact first-order deformations of homogeneous foliations"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Integrability, integrating factor, mu and genericity");
    add_common(check, o);

    auto* deform = app.add_subcommand("deform", "Kernel of the deformation operator");
    add_common(deform, o);
    add_degree(deform, o);
    add_quotient(deform, o);

    auto* relcohom = app.add_subcommand("relcohom", "Kernel of the relative cohomology operator");
    add_common(relcohom, o);
    add_degree(relcohom, o);
    add_quotient(relcohom, o);
    relcohom->add_option("--factor", o.factor, "Integrating factor F for a bare --form");

    auto* projective = app.add_subcommand("projectivize", "z eta - i_R(eta) dz and projective parameters");
    add_common(projective, o);
    add_degree(projective, o);

    auto* verify = app.add_subcommand("verify", "Mechanical verification of one result");
    verify->add_option("theorem", o.theorem, "Which result")
        ->required()
        ->check(CLI::IsMember({"rational", "logarithmic", "exact", "coro1", "prop2", "affine-def", "dicritical",
                               "different-degree", "projective", "identities", "integrating-factor"}));
    add_common(verify, o);
    add_degree(verify, o);
    verify->add_option("--eta", o.eta, "Perturbation one-form");
    verify->add_option("--factor", o.factor, "Factor of F (repeat)");
    verify->add_option("--mult", o.mult, "Multiplicity per factor (repeat)");
    verify->add_option("--instances", o.instances, "Random instances for identities / integrating-factor")
        ->check(CLI::PositiveNumber);

    auto* decompose = app.add_subcommand("decompose", "Integration-lemma normal form of omega");
    add_common(decompose, o);
    decompose->add_option("--factor", o.factor, "Factor f_i (repeat)");
    decompose->add_option("--mult", o.mult, "Multiplicity n_i (repeat, default 1)");
    decompose->add_option("--unit", o.unit, "Constant c with F = c prod f_i^n_i (default 1)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const std::vector<CLI::App*> chosen = app.get_subcommands();
    o.subcommand = chosen.front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    try {
        const Variables v = infer_variables(o);
        Run result;
        if (o.subcommand == "check") result = cmd_check(o, v);
        else if (o.subcommand == "deform") result = cmd_kernel(o, v, false);
        else if (o.subcommand == "relcohom") result = cmd_kernel(o, v, true);
        else if (o.subcommand == "projectivize") result = cmd_projectivize(o, v);
        else if (o.subcommand == "verify") result = cmd_verify(o, v);
        else result = cmd_decompose(o, v);

        Json report;
        report["command"] = echo(o, v);
        if (result.seeded) {
            report["seed"] = o.seed;
            report["trials"] = o.trials;
        }
        report["result"] = std::move(result.result);
        report["exit_status"] = result.exit_code;
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report["timing"] = {{"seconds", seconds}};
        write_report(report, o, out);
        return result.exit_code;
    } catch (const ParseError& e) {
        err << "error: parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError& e) {
        err << "error: internal check failed: " << e.what() << "\n";
        return kVerdictFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace folia::cli
