#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "folia/form.hpp"
#include "folia/linalg.hpp"

namespace folia {

/// One coordinate of a polynomial form: the monomial coefficient of dx_I.
using FormCoordinate = std::pair<IndexSet, Monomial>;

/// Canonical order on coordinates: index sets lexicographically, then grlex.
struct CoordinateLess {
    bool operator()(const FormCoordinate& a, const FormCoordinate& b) const;
};

/// The finite-dimensional space of k-forms of total degree e in n variables,
/// with its monomial coordinate basis in canonical order.
class FormSpace {
public:
    FormSpace() = default;
    FormSpace(std::size_t ambient_dim, std::size_t arity, int degree);

    /// Homogeneous one-forms of total degree e, the usual deformation domain.
    static FormSpace one_forms(std::size_t ambient_dim, int degree) { return {ambient_dim, 1, degree}; }

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t arity() const noexcept { return k_; }
    int degree() const noexcept { return e_; }
    std::size_t dimension() const noexcept { return coords_.size(); }
    const std::vector<FormCoordinate>& coordinates() const noexcept { return coords_; }

    std::optional<std::size_t> index_of(const FormCoordinate& c) const;
    Form basis_form(std::size_t j) const;
    Form form_of(std::span<const Scalar> v) const;
    /// Throws PreconditionError when `f` does not lie in this space.
    std::vector<Scalar> vector_of(const Form& f) const;
    bool contains(const Form& f) const;

    friend bool operator==(const FormSpace& a, const FormSpace& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.e_ == b.e_;
    }

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    int e_ = 0;
    std::vector<FormCoordinate> coords_;
    std::map<FormCoordinate, std::size_t, CoordinateLess> index_;
};

/// Dense coefficient matrix whose column j holds forms[j]; rows are the
/// coordinates occurring in any of the forms, in canonical order.
Matrix coefficient_columns(const std::vector<Form>& forms);

} // namespace folia
