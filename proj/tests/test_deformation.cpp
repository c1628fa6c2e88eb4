#include <doctest.h>

#include "folia/deformation.hpp"
#include "folia/error.hpp"
#include "folia/selftest.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace folia;
using support::P;
using support::W;

namespace {

const FoliationSpec kRational = AffineRational{P("x"), P("y"), Scalar(1), Scalar(2)};
const FoliationSpec kRationalConic = AffineRational{P("y"), P("y^2 + x*z"), Scalar(1), Scalar(5)};
const FoliationSpec kLogarithmic = AffineLogarithmic{{P("x"), P("y"), P("z")}, {Scalar(1), Scalar(2), Scalar(5)}};
const Exact kFermat{P("x^3 + y^3 + z^3")};

std::vector<Form> oracle_deform_kernel(const Form& omega, int e) {
    return oracle::kernel(oracle::one_form_basis(omega.ambient_dim(), e),
                          [&omega](const Form& eta) { return deform_operator(omega, eta); });
}

} // namespace

TEST_CASE("deform_operator examples") {
    const Form omega = realize(kLogarithmic);
    CHECK(deform_operator(omega, omega).is_zero());
    CHECK(deform_operator(omega, omega) == Scalar(2) * wedge(omega, ext_d(omega)));

    // omega = l1 P2 dP1 + l2 P1 dP2 with P1 perturbed by Q.
    const Poly p1 = P("x^2 + y*z");
    const Poly p2 = P("x*y - z^2");
    const Poly q = P("y^2 - 3*x*z");
    const Scalar l1(3);
    const Scalar l2(-7);
    const auto d = [](const Poly& p) { return ext_d(Form::function(p)); };
    const Form w = (l1 * p2) * d(p1) + (l2 * p1) * d(p2);
    const Form eta = (l1 * p2) * d(q) + (l2 * q) * d(p2);
    CHECK(is_integrable(w));
    CHECK(deform_operator(w, eta).is_zero());

    const Form dp = d(kFermat.p);
    CHECK(deform_operator(dp, d(P("x*y*z + y^3"))).is_zero());
    CHECK(deform_operator(dp, dp).arity() == 3);
    CHECK_THROWS_AS(deform_operator(dp, W("dx", 4)), DimensionMismatch);
}

TEST_CASE("relcohom_operator examples") {
    const Form omega = realize(kRational);
    const Poly F = P("x*y");
    CHECK(relcohom_operator(omega, F, omega).is_zero());
    CHECK(relcohom_operator(omega, F, W("dx")).is_zero());
    const Form log = realize(kLogarithmic);
    CHECK(relcohom_operator(log, P("x*y*z"), W("y*dx + 2*x*dy")).is_zero());
    CHECK(relcohom_operator(log, P("x*y*z"), log).is_zero());
    CHECK_FALSE(relcohom_operator(log, P("x*y*z"), W("z*dx")).is_zero());
}

TEST_CASE("kernel_space examples against the brute-force oracle") {
    const Form dp = realize(kFermat);
    const SubspaceBasis k = kernel_space(KernelOperator::deform(dp), 3, true);
    CHECK(k.dimension() == 9);
    CHECK(oracle::quotient_dimension(oracle_deform_kernel(dp, 3), dp) == 9);
    CHECK(oracle::same_span_modulo(k.basis(), oracle_deform_kernel(dp, 3), dp));

    const Form omega = realize(kRational);
    const SubspaceBasis r = kernel_space(KernelOperator::deform(omega), 2, true);
    CHECK(r.dimension() == 5);
    const std::vector<Form> hand{W("x*dx"), W("y*dy"), W("x*dy"), W("y*dx"), W("z*dy - 2*y*dz"), W("x*dz - 2*z*dx")};
    CHECK(oracle::quotient_dimension(hand, omega) == 5);
    CHECK(oracle::same_span_modulo(r.basis(), hand, omega));
    CHECK(oracle::same_span_modulo(oracle_deform_kernel(omega, 2), hand, omega));

    CHECK_THROWS_AS(KernelOperator::relcohom_for(kFermat), PreconditionError);
    CHECK_THROWS_AS(kernel_space(KernelOperator::deform(omega), 3, true), PreconditionError);
    CHECK_THROWS_AS(kernel_space(KernelOperator::deform(omega), 0, false), PreconditionError);
    CHECK_THROWS_AS(kernel_space(KernelOperator::deform(W("x*dy + y*dz + z*dx")), 2, false), PreconditionError);
}

TEST_CASE("kernels match the oracle across instances and degrees") {
    const std::vector<FoliationSpec> specs{kRational, kRationalConic, kLogarithmic, kFermat,
                                           AffineLogarithmic{{P("x"), P("y"), P("x + y + z")},
                                                             {Scalar(1), Scalar(-3), Scalar(4)}}};
    for (const auto& spec : specs) {
        const Form omega = realize(spec);
        const int e = form_degree(spec);
        for (int d = std::max(1, e - 1); d <= e + 1; ++d) {
            CAPTURE(d);
            const SubspaceBasis k = kernel_space(KernelOperator::deform(omega), d, false);
            REQUIRE(k.space().dimension() <= 200);
            const std::vector<Form> expected = oracle_deform_kernel(omega, d);
            CHECK(k.dimension() == expected.size());
            CHECK(oracle::same_span(k.basis(), expected));
            if (has_parameters(spec)) {
                const KernelOperator rel = KernelOperator::relcohom_for(spec);
                const SubspaceBasis kr = kernel_space(rel, d, false);
                const std::vector<Form> expected_rel =
                    oracle::kernel(oracle::one_form_basis(3, d), [&rel](const Form& eta) { return rel.apply(eta); });
                CHECK(kr.dimension() == expected_rel.size());
                CHECK(oracle::same_span(kr.basis(), expected_rel));
            }
        }
    }
}

TEST_CASE("param_perturbation_space examples") {
    ParamOptions first;
    first.slots = std::vector<std::size_t>{0};
    first.quotient = false;
    const SubspaceBasis a = param_perturbation_space(kRational, first);
    CHECK(a.generators().size() == 3);
    CHECK(oracle::same_span(a.generators(), {realize(kRational), W("-y*dy"), W("z*dy - 2*y*dz")}));
    CHECK(a.dimension() == 3);

    ParamOptions third;
    third.slots = std::vector<std::size_t>{2};
    third.quotient = false;
    const SubspaceBasis b = param_perturbation_space(kLogarithmic, third);
    CHECK(b.contains(W("y*x*dx + 2*x^2*dy + 5*x*y*dx")));

    ParamOptions constant;
    constant.target_degrees = std::vector<int>{0, 1, 1};
    CHECK_THROWS_AS(param_perturbation_space(kLogarithmic, constant), PreconditionError);
    CHECK_THROWS_AS(param_perturbation_space(kFermat), PreconditionError);

    // "+" variant: f1 replaced by quadrics gives forms of degree 3, no quotient.
    ParamOptions plus;
    plus.target_degrees = std::vector<int>{2, 1};
    plus.slots = std::vector<std::size_t>{0};
    const SubspaceBasis c = param_perturbation_space(kRational, plus);
    CHECK(c.degree() == 3);
    CHECK_FALSE(c.quotient_by().has_value());
    // Replacing f1 by x + eps g keeps the form rational, hence integrable.
    for (const auto& g : c.generators()) CHECK(deform_operator(realize(kRational), g).is_zero());
}

TEST_CASE("eigen_perturbation_space examples") {
    const SubspaceBasis a = eigen_perturbation_space(kRational, false);
    CHECK(a.dimension() == 2);
    CHECK(oracle::same_span(a.basis(), {W("x*dy"), W("y*dx")}));
    const SubspaceBasis b = eigen_perturbation_space(kLogarithmic, false);
    CHECK(b.dimension() == 3);
    CHECK(oracle::same_span(b.basis(), {W("y*z*dx"), W("x*z*dy"), W("x*y*dz")}));
    CHECK(eigen_perturbation_space(kRational, true).dimension() == 1);
    CHECK(eigen_perturbation_space(kLogarithmic, true).dimension() == 2);
    CHECK_THROWS_AS(eigen_perturbation_space(kFermat), PreconditionError);
}

TEST_CASE("verify_decomposition on the theorem instances") {
    const DeformationReport r = verify_decomposition(kRational, 3, 1);
    CHECK(r.kind == "rational");
    CHECK(r.decomposition_verdict == DecompositionVerdict::direct_sum_equal);
    CHECK(r.dim_kernel == 5);
    CHECK(r.dim_param == 4);
    CHECK(r.dim_eigen == 1);
    CHECK(r.dim_sum == 5);
    CHECK(r.witnesses.empty());
    // -mu = 1 = r: outside the stated hypotheses, reported as such.
    CHECK(*r.mu == Scalar(-1));
    CHECK_FALSE(r.within_hypotheses);

    const DeformationReport c = verify_decomposition(kRationalConic, 3, 1);
    CHECK(c.within_hypotheses);
    CHECK(c.decomposition_verdict == DecompositionVerdict::direct_sum_equal);
    CHECK(c.dim_kernel == c.dim_param + c.dim_eigen);

    const DeformationReport l = verify_decomposition(kLogarithmic, 3, 1);
    CHECK(l.within_hypotheses);
    CHECK(*l.mu == Scalar(8));
    CHECK(l.decomposition_verdict == DecompositionVerdict::direct_sum_equal);
    CHECK(l.dim_kernel == l.dim_param + l.dim_eigen);
    CHECK(l.dim_eigen == 2);
    CHECK(l.kernel == l.sum);

    const DeformationReport x = verify_decomposition(kFermat, 3, 1);
    CHECK(x.kind == "exact");
    CHECK(x.within_hypotheses);
    CHECK(x.dim_kernel == 9);
    CHECK(x.decomposition_verdict == DecompositionVerdict::direct_sum_equal);
    CHECK(x.kernel == exact_perturbation_space(kFermat));

    CHECK_THROWS_AS(verify_decomposition(Raw{W("x*dy")}, 3, 1), PreconditionError);
    CHECK(to_string(DecompositionVerdict::proper_subspace) == "proper_subspace");
}

TEST_CASE("verify_decomposition flags a kernel larger than the expected span") {
    // A cusp still has an isolated singularity and keeps the expected dimension.
    const DeformationReport cusp = verify_decomposition(Exact{P("x^2*z - y^3")}, 3, 1);
    CHECK_FALSE(cusp.within_hypotheses);
    CHECK(cusp.dim_kernel == 9);
    // A triple line does not: x^2 dy is closed against dP but not exact.
    const DeformationReport r = verify_decomposition(Exact{P("x^3")}, 3, 1);
    CHECK_FALSE(r.within_hypotheses);
    CHECK(r.decomposition_verdict == DecompositionVerdict::proper_subspace);
    CHECK_FALSE(r.witnesses.empty());
    CHECK(r.dim_kernel == 14);
    CHECK(r.dim_sum == 9);
}

TEST_CASE("same-degree equivalence and the forward implication") {
    for (const auto& spec : {kRational, kRationalConic, kLogarithmic}) {
        CHECK(verify_coro1(spec));
        const int e = form_degree(spec);
        for (int d = e - 1; d <= e + 2; ++d) CHECK(verify_forward_implication(spec, d));
    }
    const int e = form_degree(kLogarithmic);
    CHECK(kernel_space(KernelOperator::deform(realize(kLogarithmic)), e, false) ==
          kernel_space(KernelOperator::relcohom_for(kLogarithmic), e, false));
    CHECK_THROWS_AS(verify_coro1(kFermat), PreconditionError);
}

TEST_CASE("different-degree solutions") {
    CHECK(different_degree_solution(kLogarithmic, {0, 1}) == W("y*dx + 2*x*dy"));
    CHECK(different_degree_solution(kLogarithmic, {1, 2}) == W("2*z*dy + 5*y*dz"));
    CHECK(different_degree_solution(kLogarithmic, {0, 2}) == W("z*dx + 5*x*dz"));
    CHECK(different_degree_solution(kRational, {0}) == W("dx"));
    CHECK(different_degree_solution(kRational, {1}) == W("dy"));
    CHECK(different_degree_solution(kRationalConic, {1}) == W("2*y*dy + z*dx + x*dz"));
    CHECK_THROWS_AS(different_degree_solution(kLogarithmic, {0}), PreconditionError);
    CHECK_THROWS_AS(different_degree_solution(kLogarithmic, {1, 1}), PreconditionError);
    CHECK_THROWS_AS(different_degree_solution(kFermat, {0}), PreconditionError);
}

TEST_CASE("dicritical_classify examples") {
    const Form omega = W("x*dy - y*dx");
    const DicriticalResult a = dicritical_classify(omega, W("y*dx + x*dy"));
    CHECK_FALSE(a.descends);
    CHECK(a.F == P("2*x*y"));
    CHECK(a.omega_over_F_closed);
    CHECK(a.eta_over_F_closed);

    const DicriticalResult b = dicritical_classify(omega, omega);
    CHECK(b.descends);

    const DicriticalResult c = dicritical_classify(omega, W("y*dx + x*dy"), Factorization{{P("x"), P("y")}, {1, 1}});
    REQUIRE(c.omega_decomposition.has_value());
    REQUIRE(c.eta_decomposition.has_value());
    CHECK(c.omega_decomposition->lambda == std::vector<Scalar>{Scalar::fraction(-1, 2), Scalar::fraction(1, 2)});
    CHECK(c.eta_decomposition->lambda == std::vector<Scalar>{Scalar::fraction(1, 2), Scalar::fraction(1, 2)});
    CHECK(c.omega_decomposition->g.is_zero());
    CHECK(c.eta_decomposition->g.is_zero());

    CHECK_THROWS_AS(dicritical_classify(W("x*dy - 2*y*dx"), W("dx")), PreconditionError);
    CHECK_THROWS_AS(dicritical_classify(omega, W("z*dx")), PreconditionError);
    CHECK_THROWS_AS(dicritical_classify(omega, W("y*dx + x*dy"), Factorization{{P("x")}, {1}}), PreconditionError);
}

TEST_CASE("operators are linear in eta") {
    Rng rng(51);
    const Form omega = realize(kLogarithmic);
    const Poly F = P("x*y*z");
    for (int t = 0; t < 30; ++t) {
        const int d = static_cast<int>(rng.uniform(1, 3));
        const Form a = random_form(3, 1, d - 1, rng);
        const Form b = random_form(3, 1, d - 1, rng);
        const Scalar c = random_scalar(rng, true);
        CHECK(deform_operator(omega, a + c * b) == deform_operator(omega, a) + c * deform_operator(omega, b));
        CHECK(relcohom_operator(omega, F, a + c * b) ==
              relcohom_operator(omega, F, a) + c * relcohom_operator(omega, F, b));
    }
}

TEST_CASE("omega lies in its own deformation kernel") {
    Rng rng(52);
    for (int t = 0; t < 20; ++t) {
        const FoliationSpec spec = random_parameter_spec(3, 2, rng);
        const Form omega = realize(spec);
        CHECK(deform_operator(omega, omega).is_zero());
        const SubspaceBasis k = kernel_space(KernelOperator::deform(omega), form_degree(spec), false);
        CHECK(k.contains(omega));
    }
}

TEST_CASE("subspace bases are canonical") {
    const FormSpace space = FormSpace::one_forms(3, 2);
    const std::vector<Form> gens{W("x*dy"), W("y*dx"), W("x*dy + y*dx")};
    const std::vector<Form> other{W("3*y*dx - x*dy"), W("x*dy + 2*y*dx")};
    CHECK(SubspaceBasis::span(space, gens) == SubspaceBasis::span(space, other));
    const Form w = W("x*dy - 2*y*dx");
    const SubspaceBasis q = SubspaceBasis::span(space, gens, w);
    CHECK(q.dimension() == 1);
    CHECK(q.contains(W("y*dx")));
    CHECK(q.contains(w));
    CHECK_FALSE(q.contains(W("z*dx")));
    CHECK_FALSE(SubspaceBasis::span(space, gens) == q);
    const SubspaceBasis repeat = kernel_space(KernelOperator::deform(realize(kLogarithmic)), 3, true);
    CHECK(repeat == kernel_space(KernelOperator::deform(realize(kLogarithmic)), 3, true));
    CHECK_THROWS_AS(SubspaceBasis::span(space, {W("dx")}), PreconditionError);
}

TEST_CASE("assembly is deterministic and matches column images") {
    const FormSpace domain = FormSpace::one_forms(3, 3);
    const Form omega = realize(kLogarithmic);
    const auto op = [&omega](const Form& eta) { return deform_operator(omega, eta); };
    const Matrix a = assemble_matrix(domain, op);
    CHECK(a == assemble_matrix(domain, op));
    std::vector<Form> images;
    for (std::size_t j = 0; j < domain.dimension(); ++j) images.push_back(op(domain.basis_form(j)));
    CHECK(a == coefficient_columns(images));
}
