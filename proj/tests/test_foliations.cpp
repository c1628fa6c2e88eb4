#include <doctest.h>

#include "folia/error.hpp"
#include "folia/selftest.hpp"
#include "support.hpp"

using namespace folia;
using support::P;
using support::S;
using support::W;

namespace {

FoliationSpec rational(const char* f1, const char* f2, int r, int s) {
    return AffineRational{P(f1), P(f2), Scalar(r), Scalar(s)};
}

FoliationSpec log_xyz(int a, int b, int c) {
    return AffineLogarithmic{{P("x"), P("y"), P("z")}, {Scalar(a), Scalar(b), Scalar(c)}};
}

} // namespace

TEST_CASE("realize examples") {
    CHECK(realize(rational("x", "y", 1, 2)) == W("x*dy - 2*y*dx"));
    CHECK(realize(log_xyz(1, 2, 5)) == W("y*z*dx + 2*x*z*dy + 5*x*y*dz"));
    CHECK(realize(Exact{P("x^3 + y^3 + z^3")}) == W("3*x^2*dx + 3*y^2*dy + 3*z^2*dz"));
    CHECK(realize(Raw{W("x*dy")}) == W("x*dy"));
    CHECK(form_degree(rational("x", "y^2 + x*z", 1, 5)) == 3);
    CHECK(form_degree(log_xyz(1, 2, 5)) == 3);
}

TEST_CASE("validate rejects bad specs") {
    CHECK_THROWS_AS(validate(rational("x", "y + z^2", 1, 2)), PreconditionError);
    CHECK_THROWS_AS(validate(rational("x", "1", 1, 2)), PreconditionError);
    CHECK_THROWS_AS(validate(rational("x", "0", 1, 2)), PreconditionError);
    CHECK_THROWS_AS(validate(AffineLogarithmic{{P("x")}, {Scalar(1)}}), PreconditionError);
    CHECK_THROWS_AS(validate(AffineLogarithmic{{P("x"), P("y")}, {Scalar(1)}}), PreconditionError);
    CHECK_THROWS_AS(validate(AffineRational{P("x"), P("y", 4), Scalar(1), Scalar(1)}), DimensionMismatch);
    CHECK_THROWS_AS(validate(Raw{W("x*dy + dz")}), PreconditionError);
    CHECK_NOTHROW(validate(log_xyz(1, 2, 5)));
    CHECK(AffineLogarithmic{{P("x"), P("y")}, {Scalar(1), Scalar(2)}}.is_rational_case());
}

TEST_CASE("is_integrable examples") {
    CHECK(is_integrable(realize(rational("x", "y", 1, 2))));
    CHECK(is_integrable(realize(log_xyz(1, 2, 5))));
    CHECK_FALSE(is_integrable(W("x*dy + y*dz + z*dx")));
}

TEST_CASE("integrating_factor examples") {
    const IntegratingFactor a = integrating_factor(rational("x", "y", 1, 2));
    CHECK(a.F == P("x*y"));
    CHECK(a.verified);
    const IntegratingFactor b = integrating_factor(log_xyz(1, 2, 5));
    CHECK(b.F == P("x*y*z"));
    CHECK(b.verified);
    const IntegratingFactor c = integrating_factor(rational("x", "y", 1, 1));
    CHECK(c.F == P("x*y"));
    CHECK(c.verified);
    CHECK(realize(rational("x", "y", 1, 1)) == W("x*dy - y*dx"));
    CHECK_THROWS_AS(integrating_factor(Exact{P("x^2")}), PreconditionError);
    CHECK_FALSE(is_integrating_factor(P("x"), W("x*dy - 2*y*dx")));
}

TEST_CASE("mu_of examples") {
    CHECK(mu_of(log_xyz(1, 2, 5)) == Scalar(8));
    CHECK(mu_of(rational("x", "y", 1, 1)) == Scalar(0));
    CHECK(mu_of(rational("x", "y", 1, 2)) == Scalar(-1));
    // r d2 - s d1 with d1 = 1, d2 = 2.
    CHECK(mu_of(rational("y", "y^2 + x*z", 1, 5)) == Scalar(-3));
}

TEST_CASE("genericity_check examples") {
    const GenericityReport a = genericity_check(log_xyz(1, 2, 5), 3, 1);
    CHECK(a.eigenvalues_ok);
    CHECK(a.normal_crossings_ok);
    CHECK(a.mu_nonzero);
    CHECK(a.verdict == Verdict::generic);
    CHECK(a.trials_used == 3);
    CHECK(a.primes.size() == 3);

    const GenericityReport b = genericity_check(log_xyz(1, 1, 5), 3, 1);
    CHECK_FALSE(b.eigenvalues_ok);
    CHECK(b.verdict == Verdict::not_generic);

    const GenericityReport c = genericity_check(rational("x", "x*y", 1, 2), 3, 1);
    CHECK_FALSE(c.normal_crossings_ok);
    CHECK(c.verdict == Verdict::not_generic);

    CHECK_THROWS_AS(genericity_check(log_xyz(1, 2, 5), 0, 1), PreconditionError);
    CHECK_THROWS_AS(genericity_check(Exact{P("x^3")}, 2, 1), PreconditionError);
}

TEST_CASE("genericity details") {
    // Tangent components: x = 0 meets y^2 + xz = 0 only at [0:0:1], tangentially.
    CHECK_FALSE(genericity_check(rational("x", "y^2 + x*z", 1, 5), 3, 4).normal_crossings_ok);
    CHECK(genericity_check(rational("y", "y^2 + x*z", 1, 5), 3, 4).verdict == Verdict::generic);
    // r == -s violates the eigenvalue condition.
    CHECK_FALSE(genericity_check(rational("x", "y", 1, -1), 2, 4).eigenvalues_ok);
    // A singular conic is not a normal crossing divisor by itself.
    CHECK_FALSE(genericity_check(rational("z", "x^2 - y^2", 1, 3), 3, 4).normal_crossings_ok);
    // mu == 0 is reported and makes the spec non-generic.
    const GenericityReport d = genericity_check(rational("x", "y", 1, 1), 2, 4);
    CHECK_FALSE(d.mu_nonzero);
    CHECK(d.verdict == Verdict::not_generic);
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("genericity is reproducible for a seed") {
    const GenericityReport a = genericity_check(rational("x", "y^2 + x*z", 1, 5), 4, 99);
    const GenericityReport b = genericity_check(rational("x", "y^2 + x*z", 1, 5), 4, 99);
    CHECK(a.primes == b.primes);
    CHECK(a.trials_failed == b.trials_failed);
    CHECK(a.trials_with_zeros == b.trials_with_zeros);
}

TEST_CASE("exact hypothesis check") {
    CHECK(exact_hypothesis_check(P("x^3 + y^3 + z^3"), 3, 5) == Verdict::generic);
    CHECK(exact_hypothesis_check(P("x^2*z - y^3"), 3, 5) == Verdict::not_generic);
    CHECK(exact_hypothesis_check(P("x^3 + y^3 + z^3 + w^3", 4), 3, 5) == Verdict::inconclusive);
}

TEST_CASE("integration lemma examples") {
    const IntegrationLemmaResult a = integration_lemma_decompose(W("x*dy - y*dx"), {P("x"), P("y")}, {1, 1});
    CHECK(a.residual_ok);
    CHECK(a.lambda == std::vector<Scalar>{-1, 1});
    CHECK(a.g.is_zero());

    const IntegrationLemmaResult b = integration_lemma_decompose(W("y*dx + x*dy"), {P("x"), P("y")}, {1, 1});
    CHECK(b.residual_ok);
    CHECK(b.lambda == std::vector<Scalar>{1, 1});
    CHECK(b.g.is_zero());

    const IntegrationLemmaResult c =
        integration_lemma_decompose(W("y*z*dx + 2*x*z*dy + 5*x*y*dz"), {P("x"), P("y"), P("z")}, {1, 1, 1});
    CHECK(c.residual_ok);
    CHECK(c.lambda == std::vector<Scalar>{1, 2, 5});
    CHECK(c.g.is_zero());

    CHECK_THROWS_AS(integration_lemma_decompose(W("x*dy - 2*y*dx"), {P("x")}, {1}), PreconditionError);
    CHECK_THROWS_AS(integration_lemma_decompose(W("x*dy - y*dx"), {P("x"), P("y")}, {1}), PreconditionError);
}

TEST_CASE("integration lemma with multiplicities and an exact part") {
    // omega = x^2 y [ dx/x + d(g / x) ] with g = y; deg g = e - deg F + (n_x - 1) = 1.
    const Poly F = P("x^2*y");
    const Poly g = P("y");
    const Form log_part = P("x*y") * W("dx");
    // x^2 y d(g / x) = x^2 y (x dg - g dx) / x^2 = y (x dg - g dx)
    const Form exact_part = P("y") * (P("x") * ext_d(Form::function(g)) - g * W("dx"));
    const Form omega = log_part + exact_part;
    REQUIRE(is_integrating_factor(F, omega));
    const IntegrationLemmaResult r = integration_lemma_decompose(omega, {P("x"), P("y")}, {2, 1});
    CHECK(r.residual_ok);
    CHECK(r.lambda == std::vector<Scalar>{1, 0});
    CHECK(r.g == g);
}

TEST_CASE("integration lemma is a left inverse of realize") {
    Rng rng(41);
    const std::vector<Poly> lines{P("x"), P("y"), P("z"), P("x + y + z"), P("x - 2*y + 3*z")};
    for (int t = 0; t < 12; ++t) {
        const auto s = static_cast<std::size_t>(rng.uniform(2, 4));
        AffineLogarithmic spec;
        for (std::size_t k = 0; k < s; ++k) {
            spec.f.push_back(lines[(static_cast<std::size_t>(t) + k) % lines.size()]);
            spec.lambda.push_back(random_scalar(rng, true));
        }
        const IntegrationLemmaResult r = integration_lemma_decompose(realize(spec), spec.f, std::vector<int>(s, 1));
        CHECK(r.residual_ok);
        CHECK(r.lambda == spec.lambda);
        CHECK(r.g.is_zero());
    }
}

TEST_CASE("random specs: integrable, integrating factor, i_R = mu F") {
    Rng rng(42);
    const VectorField radial = radial_field(3);
    for (int t = 0; t < 40; ++t) {
        const FoliationSpec spec = random_parameter_spec(3, 3, rng);
        const Form omega = realize(spec);
        CHECK(is_integrable(omega));
        const IntegratingFactor f = integrating_factor(spec);
        CHECK(f.verified);
        CHECK(contract(radial, omega).as_function() == mu_of(spec) * f.F);
    }
    CHECK(integrating_factor_suite(40, 43).all_passed());
}

TEST_CASE("rational specs are logarithmic with eigenvalues (-s, r)") {
    Rng rng(44);
    for (int t = 0; t < 20; ++t) {
        const AffineRational r{random_homogeneous(3, static_cast<int>(rng.uniform(1, 3)), rng),
                               random_homogeneous(3, static_cast<int>(rng.uniform(1, 3)), rng), random_scalar(rng),
                               random_scalar(rng)};
        const AffineLogarithmic l{{r.f1, r.f2}, {-r.s, r.r}};
        CHECK(realize(r) == realize(l));
        const AffineLogarithmic converted = as_logarithmic(r);
        CHECK(converted.lambda == l.lambda);
    }
}

TEST_CASE("gaussian eigenvalues are supported") {
    const FoliationSpec spec = AffineLogarithmic{{P("x"), P("y"), P("z")}, {S("1"), S("i"), S("2 - i")}};
    CHECK(is_integrable(realize(spec)));
    CHECK(mu_of(spec) == S("3"));
    CHECK(genericity_check(spec, 2, 3).verdict == Verdict::generic);
}
