#include "folia/foliation.hpp"

#include <random>

#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/space.hpp"
#include "modular.hpp"

namespace folia {

namespace {

template<class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Form differential_of(const Poly& p) { return ext_d(Form::function(p)); }

void require_parameter(const Poly& p, std::size_t n, const char* what) {
    if (p.ambient_dim() != n) throw DimensionMismatch(std::string(what) + " lives in a different ring");
    const Homogeneity h = homogeneous_degree(p);
    if (h.is_zero()) throw PreconditionError(std::string(what) + " must be nonzero");
    if (h.is_mixed()) throw PreconditionError(std::string(what) + " must be homogeneous");
    if (h.degree < 1) throw PreconditionError(std::string(what) + " must have positive degree");
}

Poly product(const std::vector<Poly>& factors, std::size_t n, std::optional<std::size_t> skip = std::nullopt) {
    Poly out = Poly::constant(n, Scalar(1));
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (skip && *skip == j) continue;
        out = out * factors[j];
    }
    return out;
}

} // namespace

bool is_rational(const FoliationSpec& spec) { return std::holds_alternative<AffineRational>(spec); }
bool is_logarithmic(const FoliationSpec& spec) { return std::holds_alternative<AffineLogarithmic>(spec); }
bool has_parameters(const FoliationSpec& spec) { return is_rational(spec) || is_logarithmic(spec); }

std::size_t ambient_dim(const FoliationSpec& spec) {
    return std::visit(overloaded{
                          [](const AffineRational& s) { return s.f1.ambient_dim(); },
                          [](const AffineLogarithmic& s) { return s.f.empty() ? 0 : s.f.front().ambient_dim(); },
                          [](const Exact& s) { return s.p.ambient_dim(); },
                          [](const Raw& s) { return s.omega.ambient_dim(); },
                      },
                      spec);
}

void validate(const FoliationSpec& spec) {
    std::visit(overloaded{
                   [](const AffineRational& s) {
                       const std::size_t n = s.f1.ambient_dim();
                       require_parameter(s.f1, n, "f1");
                       require_parameter(s.f2, n, "f2");
                   },
                   [](const AffineLogarithmic& s) {
                       if (s.f.size() < 2) throw PreconditionError("a logarithmic spec needs at least two factors");
                       if (s.lambda.size() != s.f.size()) {
                           throw PreconditionError("a logarithmic spec needs one eigenvalue per factor");
                       }
                       const std::size_t n = s.f.front().ambient_dim();
                       for (const auto& f : s.f) require_parameter(f, n, "logarithmic factor");
                   },
                   [](const Exact& s) { require_parameter(s.p, s.p.ambient_dim(), "P"); },
                   [](const Raw& s) {
                       if (s.omega.arity() != 1) throw PreconditionError("a raw spec needs a one-form");
                       const Homogeneity h = total_degree(s.omega);
                       if (!h.is_homogeneous()) throw PreconditionError("a raw one-form must be nonzero and homogeneous");
                   },
               },
               spec);
}

int form_degree(const FoliationSpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const AffineRational& s) {
                              return homogeneous_degree(s.f1).degree + homogeneous_degree(s.f2).degree;
                          },
                          [](const AffineLogarithmic& s) {
                              int e = 0;
                              for (const auto& f : s.f) e += homogeneous_degree(f).degree;
                              return e;
                          },
                          [](const Exact& s) { return homogeneous_degree(s.p).degree; },
                          [](const Raw& s) { return total_degree(s.omega).degree; },
                      },
                      spec);
}

AffineLogarithmic as_logarithmic(const FoliationSpec& spec) {
    if (const auto* r = std::get_if<AffineRational>(&spec)) return {{r->f1, r->f2}, {-r->s, r->r}};
    if (const auto* l = std::get_if<AffineLogarithmic>(&spec)) return *l;
    throw PreconditionError("only rational and logarithmic specs carry logarithmic data");
}

Form realize(const FoliationSpec& spec) {
    validate(spec);
    return std::visit(overloaded{
                          [](const AffineRational& s) {
                              return s.r * (s.f1 * differential_of(s.f2)) - s.s * (s.f2 * differential_of(s.f1));
                          },
                          [](const AffineLogarithmic& s) {
                              const std::size_t n = s.f.front().ambient_dim();
                              Form omega(n, 1);
                              for (std::size_t k = 0; k < s.f.size(); ++k) {
                                  omega += s.lambda[k] * (product(s.f, n, k) * differential_of(s.f[k]));
                              }
                              return omega;
                          },
                          [](const Exact& s) { return differential_of(s.p); },
                          [](const Raw& s) { return s.omega; },
                      },
                      spec);
}

bool is_integrable(const Form& omega) { return wedge(omega, ext_d(omega)).is_zero(); }

bool is_integrating_factor(const Poly& F, const Form& omega) {
    return F * ext_d(omega) == wedge(differential_of(F), omega);
}

IntegratingFactor integrating_factor(const FoliationSpec& spec) {
    if (!has_parameters(spec)) throw PreconditionError("integrating factor needs a rational or logarithmic spec");
    const AffineLogarithmic data = as_logarithmic(spec);
    const Poly F = product(data.f, data.f.front().ambient_dim());
    return {F, is_integrating_factor(F, realize(spec))};
}

Scalar mu_of(const FoliationSpec& spec) {
    const Form omega = realize(spec);
    const Poly F = integrating_factor(spec).F;
    const Poly contracted = contract(radial_field(omega.ambient_dim()), omega).as_function();
    auto q = exact_divide(contracted, F);
    if (!q) throw InternalError("i_R(omega) is not a multiple of the integrating factor");
    if (!q->is_zero() && homogeneous_degree(*q).degree != 0) {
        throw InternalError("i_R(omega) / F is not a constant");
    }
    return q->constant_term();
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::generic: return "generic";
    case Verdict::not_generic: return "not_generic";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

bool eigenvalues_ok(const FoliationSpec& spec) {
    if (const auto* r = std::get_if<AffineRational>(&spec)) {
        return !r->r.is_zero() && !r->s.is_zero() && !(r->r == -r->s);
    }
    const auto& lambda = std::get<AffineLogarithmic>(spec).lambda;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].is_zero()) return false;
        for (std::size_t j = i + 1; j < lambda.size(); ++j) {
            if (lambda[i] == lambda[j]) return false;
        }
    }
    return true;
}

struct TrialOutcome {
    bool skipped = false; // bad reduction
    bool met_divisor = false;
    bool failed = false;
};

// One normal-crossings trial over F_p.
TrialOutcome normal_crossings_trial(const std::vector<Poly>& factors, modular::u64 p) {
    using modular::u64;
    const std::size_t n = factors.front().ambient_dim();
    const u64 i_mod = modular::sqrt_minus_one(p);
    std::vector<modular::PolyModP> f;
    std::vector<std::vector<modular::PolyModP>> grad;
    for (const auto& poly : factors) {
        auto reduced = modular::reduce(poly, p, i_mod);
        if (!reduced || reduced->coeffs.empty()) return {true, false, false};
        f.push_back(std::move(*reduced));
        auto& g = grad.emplace_back();
        for (std::size_t i = 0; i < n; ++i) {
            auto d = modular::reduce(partial_derivative(poly, i), p, i_mod);
            if (!d) return {true, false, false};
            g.push_back(std::move(*d));
        }
    }

    TrialOutcome out;
    std::vector<std::size_t> vanishing;
    modular::for_each_projective_point(n, p, [&](std::span<const u64> point) {
        if (out.failed) return;
        vanishing.clear();
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k].evaluate(point, p) == 0) vanishing.push_back(k);
        }
        if (vanishing.empty()) return;
        out.met_divisor = true;
        if (vanishing.size() > n - 1) {
            out.failed = true;
            return;
        }
        std::vector<std::vector<u64>> rows;
        for (std::size_t k : vanishing) {
            auto& row = rows.emplace_back(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = grad[k][i].evaluate(point, p);
        }
        if (modular::rank_mod_p(std::move(rows), p) < vanishing.size()) out.failed = true;
    });
    return out;
}

} // namespace

GenericityReport genericity_check(const FoliationSpec& spec, int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("genericity check needs at least one trial");
    if (!has_parameters(spec)) throw PreconditionError("genericity check needs a rational or logarithmic spec");
    validate(spec);

    GenericityReport report;
    report.eigenvalues_ok = eigenvalues_ok(spec);
    report.mu = mu_of(spec);
    report.mu_nonzero = !report.mu.is_zero();

    const AffineLogarithmic data = as_logarithmic(spec);
    const std::size_t n = data.f.front().ambient_dim();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const auto p = modular::pick_prime(n, rng);
        report.primes.push_back(p);
        ++report.trials_used;
        const TrialOutcome outcome = normal_crossings_trial(data.f, p);
        if (outcome.skipped) continue;
        if (outcome.met_divisor) ++report.trials_with_zeros;
        if (outcome.failed) ++report.trials_failed;
    }
    report.normal_crossings_ok = report.trials_with_zeros > 0 && 2 * report.trials_failed <= report.trials_with_zeros;
    if (!report.eigenvalues_ok || !report.mu_nonzero || (report.trials_with_zeros > 0 && !report.normal_crossings_ok)) {
        report.verdict = Verdict::not_generic;
    } else if (report.trials_with_zeros == 0) {
        report.verdict = Verdict::inconclusive;
    } else {
        report.verdict = Verdict::generic;
    }
    return report;
}

Verdict exact_hypothesis_check(const Poly& poly, int trials, std::uint64_t seed) {
    using modular::u64;
    if (trials < 1) throw PreconditionError("hypothesis check needs at least one trial");
    const std::size_t n = poly.ambient_dim();
    if (n != 3) return Verdict::inconclusive;
    std::mt19937_64 rng(seed);
    int checked = 0;
    int failed = 0;
    for (int t = 0; t < trials; ++t) {
        const u64 p = modular::pick_prime(n, rng);
        const u64 i_mod = modular::sqrt_minus_one(p);
        std::vector<modular::PolyModP> grad;
        bool bad_reduction = false;
        for (std::size_t i = 0; i < n; ++i) {
            auto d = modular::reduce(partial_derivative(poly, i), p, i_mod);
            if (!d) bad_reduction = true;
            else grad.push_back(std::move(*d));
        }
        if (bad_reduction) continue;
        ++checked;
        bool singular = false;
        modular::for_each_projective_point(n, p, [&](std::span<const u64> point) {
            if (singular) return;
            for (const auto& g : grad) {
                if (g.evaluate(point, p) != 0) return;
            }
            singular = true;
        });
        if (singular) ++failed;
    }
    if (checked == 0) return Verdict::inconclusive;
    return 2 * failed > checked ? Verdict::not_generic : Verdict::generic;
}

IntegrationLemmaResult integration_lemma_decompose(const Form& omega, const std::vector<Poly>& factors,
                                                   const std::vector<int>& mult, const Scalar& unit) {
    if (factors.empty()) throw PreconditionError("integration lemma needs at least one factor");
    if (factors.size() != mult.size()) throw PreconditionError("one multiplicity per factor is required");
    if (omega.arity() != 1) throw PreconditionError("integration lemma applies to one-forms");
    if (unit.is_zero()) throw PreconditionError("the unit in front of the factorization must be nonzero");
    const std::size_t n = omega.ambient_dim();
    const Homogeneity h = total_degree(omega);
    if (h.is_mixed()) throw PreconditionError("integration lemma needs a homogeneous one-form");
    int reduced_degree = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require_parameter(factors[i], n, "factor");
        if (mult[i] < 1) throw PreconditionError("multiplicities must be positive");
        reduced_degree += homogeneous_degree(factors[i]).degree;
    }

    Poly F = Poly::constant(n, unit);
    for (std::size_t i = 0; i < factors.size(); ++i) F = F * pow(factors[i], static_cast<unsigned>(mult[i]));
    if (!is_integrating_factor(F, omega)) {
        throw PreconditionError("the given factorization is not an integrating factor of omega");
    }

    // omega / unit = sum lambda_i (F'/f_i) df_i + f dg - g sum (n_i - 1)(f/f_i) df_i,
    // with F' = prod f_i^{n_i} and f = prod f_i.
    const Form target = unit.inverse() * omega;
    const Poly F_reduced = exact_divide(F, Poly::constant(n, unit)).value();
    const Poly f = product(factors, n);
    std::vector<Form> unknowns;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unknowns.push_back(exact_divide(F_reduced, factors[i]).value() * differential_of(factors[i]));
    }
    Form log_part(n, 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (mult[i] == 1) continue;
        log_part += Scalar(mult[i] - 1) * (exact_divide(f, factors[i]).value() * differential_of(factors[i]));
    }
    const int g_degree = (h.is_zero() ? reduced_degree : h.degree) - reduced_degree;
    const auto g_monomials = monomials_of_degree(n, g_degree);
    for (const auto& m : g_monomials) {
        const Poly gm = Poly::term(m, Scalar(1));
        unknowns.push_back(f * differential_of(gm) - gm * log_part);
    }

    std::vector<Form> columns = unknowns;
    columns.push_back(target);
    const Matrix system = coefficient_columns(columns);
    const EchelonForm ech = reduced_echelon(system);
    const std::size_t rhs = unknowns.size();

    IntegrationLemmaResult out;
    out.g = Poly(n);
    if (!ech.pivots.empty() && ech.pivots.back() == rhs) return out; // inconsistent
    std::vector<Scalar> x(unknowns.size());
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) x[ech.pivots[k]] = ech.rref(k, rhs);
    out.lambda.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(factors.size()));
    for (std::size_t j = 0; j < g_monomials.size(); ++j) out.g.add_term(g_monomials[j], x[factors.size() + j]);
    out.residual_ok = true;
    return out;
}

} // namespace folia
