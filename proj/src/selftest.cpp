#include "folia/selftest.hpp"

#include "folia/error.hpp"

namespace folia {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw PreconditionError("empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Scalar random_scalar(Rng& rng, bool gaussian) {
    Scalar c;
    do {
        c = Scalar(rng.uniform(-5, 5));
        if (rng.chance(20)) c = c / Scalar(rng.uniform(2, 4));
        if (gaussian && rng.chance(25)) c = c + Scalar(rng.uniform(-3, 3)) * Scalar::imaginary_unit();
    } while (c.is_zero());
    return c;
}

Poly random_homogeneous(std::size_t n, int d, Rng& rng, int max_terms) {
    const std::vector<Monomial> monos = monomials_of_degree(n, d);
    Poly p(n);
    while (p.is_zero()) {
        const auto terms = rng.uniform(1, max_terms);
        for (std::int64_t t = 0; t < terms; ++t) {
            const auto& m = monos[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(monos.size()) - 1))];
            p.add_term(m, random_scalar(rng, true));
        }
    }
    return p;
}

namespace {

std::vector<IndexSet> index_sets(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    IndexSet cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(n); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

Form random_form(std::size_t n, std::size_t k, int coeff_degree, Rng& rng, int max_terms) {
    Form f(n, k);
    const std::vector<IndexSet> sets = index_sets(n, k);
    if (sets.empty()) return f;
    if (k == 0) return Form::function(random_homogeneous(n, coeff_degree, rng, max_terms));
    while (f.is_zero()) {
        for (const auto& idx : sets) {
            if (rng.chance(60)) f.add_component(idx, random_homogeneous(n, coeff_degree, rng, max_terms));
        }
    }
    return f;
}

VectorField random_vector_field(std::size_t n, int degree, Rng& rng) {
    VectorField x;
    for (std::size_t i = 0; i < n; ++i) {
        x.components.push_back(rng.chance(80) ? random_homogeneous(n, degree, rng, 3) : Poly(n));
    }
    return x;
}

FoliationSpec random_parameter_spec(std::size_t n, int max_degree, Rng& rng) {
    if (rng.chance(50)) {
        AffineRational spec{random_homogeneous(n, static_cast<int>(rng.uniform(1, max_degree)), rng),
                            random_homogeneous(n, static_cast<int>(rng.uniform(1, max_degree)), rng),
                            random_scalar(rng), random_scalar(rng)};
        return spec;
    }
    AffineLogarithmic spec;
    const auto count = rng.uniform(2, 4);
    for (std::int64_t k = 0; k < count; ++k) {
        spec.f.push_back(random_homogeneous(n, static_cast<int>(rng.uniform(1, max_degree)), rng));
        spec.lambda.push_back(random_scalar(rng, true));
    }
    return spec;
}

bool IdentitySuiteResult::all_passed() const {
    for (const auto& t : identities) {
        if (t.passed != t.checked) return false;
    }
    return !identities.empty();
}

namespace {

Scalar sign(std::size_t p) { return p % 2 == 0 ? Scalar(1) : Scalar(-1); }

// i_X(a ^ b) == i_X a ^ b + (-1)^p a ^ i_X b, with i_X of a function read as 0.
bool antiderivation_holds(const VectorField& x, const Form& a, const Form& b) {
    const Form lhs = contract(x, wedge(a, b));
    if (a.arity() == 0) return lhs == a.as_function() * contract(x, b);
    if (b.arity() == 0) return lhs == b.as_function() * contract(x, a);
    return lhs == wedge(contract(x, a), b) + sign(a.arity()) * wedge(a, contract(x, b));
}

} // namespace

IdentitySuiteResult exterior_identity_suite(int instances, std::uint64_t seed) {
    Rng rng(seed);
    IdentitySuiteResult out;
    out.instances = instances;
    out.identities = {{"leibniz"}, {"d_squared"}, {"antiderivation"}, {"euler"}, {"cartan"}};
    auto tally = [&out](std::size_t which, bool ok) {
        ++out.identities[which].checked;
        if (ok) ++out.identities[which].passed;
    };
    for (int t = 0; t < instances; ++t) {
        const std::size_t n = t % 2 == 0 ? 3 : 4;
        std::size_t p = 0;
        std::size_t q = 0;
        while (p + q == 0) {
            p = static_cast<std::size_t>(rng.uniform(0, 2));
            q = static_cast<std::size_t>(rng.uniform(0, 2));
        }
        // Total degree of a ^ b stays at most 6.
        const int budget = 6 - static_cast<int>(p + q);
        const int da = static_cast<int>(rng.uniform(0, budget / 2 + budget % 2));
        const int db = static_cast<int>(rng.uniform(0, budget - da));
        const Form a = random_form(n, p, da, rng);
        const Form b = random_form(n, q, db, rng);

        tally(0, ext_d(wedge(a, b)) == wedge(ext_d(a), b) + sign(p) * wedge(a, ext_d(b)));
        tally(1, ext_d(ext_d(a)).is_zero() && ext_d(ext_d(b)).is_zero());
        tally(2, antiderivation_holds(random_vector_field(n, static_cast<int>(rng.uniform(0, 2)), rng), a, b));

        const int dh = static_cast<int>(rng.uniform(0, 6));
        const Poly h = random_homogeneous(n, dh, rng);
        tally(3, contract(radial_field(n), ext_d(Form::function(h))) == Form::function(Scalar(dh) * h));

        const Form ab = wedge(a, b);
        const Form c = ab.is_zero() ? a : ab;
        tally(4, cartan_check(c, *total_degree(c).value()));
    }
    return out;
}

FactorSuiteResult integrating_factor_suite(int specs, std::uint64_t seed) {
    Rng rng(seed);
    FactorSuiteResult out;
    out.specs = specs;
    for (int t = 0; t < specs; ++t) {
        const FoliationSpec spec = random_parameter_spec(3, 3, rng);
        ++(is_rational(spec) ? out.rational : out.logarithmic);
        const IntegratingFactor f = integrating_factor(spec);
        if (f.verified && is_integrating_factor(f.F, realize(spec))) {
            ++out.passed;
        } else {
            out.failures.push_back(realize(spec));
        }
    }
    return out;
}

} // namespace folia
