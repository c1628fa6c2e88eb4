#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "folia/foliation.hpp"
#include "folia/linalg.hpp"
#include "folia/space.hpp"

namespace folia {

/// An exact subspace of a FormSpace, stored as a canonical reduced echelon
/// matrix so that equality of subspaces is equality of matrices.
///
/// When `quotient_by` is set, the subspace represents (V + C.omega) / C.omega
/// concretely: every vector is first projected along omega onto the
/// coordinate hyperplane {v[c] = 0}, where c is the first nonzero coordinate
/// of omega, and the projections are echelonized. The rows are then coset
/// representatives and `dimension()` is the quotient dimension.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    /// Span of `generators` (each must lie in `space`).
    static SubspaceBasis span(const FormSpace& space, std::vector<Form> generators,
                              std::optional<Form> quotient_by = std::nullopt);
    /// Row space of `vectors` (columns indexed by `space`).
    static SubspaceBasis row_space(const FormSpace& space, const Matrix& vectors, std::vector<Form> generators,
                                   std::optional<Form> quotient_by = std::nullopt);

    const FormSpace& space() const noexcept { return space_; }
    std::size_t ambient_dim() const noexcept { return space_.ambient_dim(); }
    int degree() const noexcept { return space_.degree(); }
    const Matrix& rows() const noexcept { return echelon_.rref; }
    const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots; }
    const std::vector<Form>& generators() const noexcept { return generators_; }
    const std::optional<Form>& quotient_by() const noexcept { return quotient_by_; }
    std::size_t dimension() const noexcept { return echelon_.rank(); }

    /// The rows as forms (coset representatives for a quotient).
    std::vector<Form> basis() const;
    /// Membership, modulo the quotient line when there is one.
    bool contains(const Form& f) const;

    /// Same space, same quotient line, same canonical rows.
    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

private:
    FormSpace space_;
    EchelonForm echelon_;
    std::vector<Form> generators_;
    std::optional<Form> quotient_by_;
    std::optional<std::size_t> quotient_column_;
};

/// omega ^ d eta + d omega ^ eta: the linearized integrability condition.
Form deform_operator(const Form& omega, const Form& eta);

/// (F d eta - dF ^ eta) ^ omega: the cleared form of d(eta / F) ^ omega.
Form relcohom_operator(const Form& omega, const Poly& F, const Form& eta);

/// A linear operator on one-forms whose kernel is computed.
class KernelOperator {
public:
    enum class Kind { deform, relcohom };

    static KernelOperator deform(Form omega);
    static KernelOperator relcohom(Form omega, Poly F);
    /// relcohom with the canonical integrating factor of a rational or
    /// logarithmic spec. Throws PreconditionError for Exact and Raw specs.
    static KernelOperator relcohom_for(const FoliationSpec& spec);

    Kind kind() const noexcept { return kind_; }
    const Form& omega() const noexcept { return omega_; }
    const std::optional<Poly>& factor() const noexcept { return F_; }

    Form apply(const Form& eta) const;

private:
    Kind kind_ = Kind::deform;
    Form omega_;
    std::optional<Poly> F_;
};

/// Matrix of a linear map on `domain`: column j holds op(basis_form(j)) in
/// the canonical order of the output coordinates that occur. Columns are
/// computed concurrently and merged in a fixed order.
Matrix assemble_matrix(const FormSpace& domain, const std::function<Form(const Form&)>& op);

/// Kernel of `op` on homogeneous one-forms of total degree e, optionally
/// modulo C.omega (only when deg omega == e).
SubspaceBasis kernel_space(const KernelOperator& op, int e, bool quotient_by_omega);

struct ParamOptions {
    /// Degree of the replacement polynomial per slot; defaults to the
    /// original degrees. Degrees below one are rejected.
    std::optional<std::vector<int>> target_degrees;
    /// Slots (0-based) to perturb; defaults to all.
    std::optional<std::vector<std::size_t>> slots;
    /// Quotient by C.omega when the generators have the degree of omega.
    bool quotient = true;
};

/// Span of the forms obtained by replacing one polynomial parameter f_i by a
/// monomial g of the target degree (every occurrence of f_i).
SubspaceBasis param_perturbation_space(const FoliationSpec& spec, const ParamOptions& options = {});

/// Span of {F_k df_k} (logarithmic) or {f1 df2, f2 df1} (rational).
SubspaceBasis eigen_perturbation_space(const FoliationSpec& spec, bool quotient = true);

/// Span of {dQ : Q homogeneous of degree deg P}, the exact-case family.
SubspaceBasis exact_perturbation_space(const Exact& spec, bool quotient = true);

enum class DecompositionVerdict { direct_sum_equal, proper_subspace, mismatch };

std::string to_string(DecompositionVerdict v);

struct DeformationReport {
    std::string kind; // "rational", "logarithmic" or "exact"
    std::size_t ambient_dim = 0;
    int e = 0;
    std::optional<Scalar> mu;
    std::optional<GenericityReport> genericity;
    bool within_hypotheses = false;
    SubspaceBasis kernel;
    SubspaceBasis param;
    SubspaceBasis eigen;
    SubspaceBasis sum;
    std::size_t dim_kernel = 0;
    std::size_t dim_param = 0;
    std::size_t dim_eigen = 0;
    std::size_t dim_sum = 0;
    DecompositionVerdict decomposition_verdict = DecompositionVerdict::mismatch;
    /// Kernel basis elements outside the expected span.
    std::vector<Form> witnesses;
};

/// Compares the same-degree deformation space, modulo C.omega, with the span
/// of parameter and eigenvalue perturbations (exact case: with {dQ}).
/// Hypotheses are reported, not enforced: outside them the verdict is still
/// computed and `within_hypotheses` is false.
DeformationReport verify_decomposition(const FoliationSpec& spec, int trials, std::uint64_t seed);

/// Kernel of the deformation operator equals the kernel of the relative
/// cohomology operator at degree deg omega (no quotient).
bool verify_coro1(const FoliationSpec& spec);

/// Every element of the deformation kernel at degree d is annihilated by the
/// relative cohomology operator.
bool verify_forward_implication(const FoliationSpec& spec, int d);

/// The extreme "+" perturbation where f_i becomes the constant 1:
/// sum_{j in J} lambda_j Fbar_j df_j for a logarithmic spec, df_j for a
/// rational one. `subset` holds s - 1 distinct 0-based slots. The result is
/// checked against the relative cohomology equation; failure raises
/// InternalError.
Form different_degree_solution(const FoliationSpec& spec, const std::vector<std::size_t>& subset);

struct Factorization {
    std::vector<Poly> factors;
    std::vector<int> mult;
};

struct DicriticalResult {
    bool descends = false;
    Poly F;
    bool omega_over_F_closed = false;
    bool eta_over_F_closed = false;
    std::optional<IntegrationLemmaResult> omega_decomposition;
    std::optional<IntegrationLemmaResult> eta_decomposition;
};

/// For a dicritical omega (i_R omega = 0) and a same-degree first-order
/// deformation eta: either i_R eta = 0 (the deformation descends), or
/// F = i_R eta is an integrating factor of both. With a factorization of F
/// (up to a constant) both forms are also put in integration-lemma form.
DicriticalResult dicritical_classify(const Form& omega, const Form& eta,
                                     const std::optional<Factorization>& factorization = std::nullopt);

} // namespace folia
