#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Strictly increasing 0-based variable indices naming dx_{i1} ^ ... ^ dx_{ik}.
using IndexSet = std::vector<int>;

/// Alternating polynomial k-form in n variables.
///
/// Components are keyed by strictly increasing index sets; zero components
/// are never stored. A k-form "of total degree e" has every component
/// homogeneous of degree e - k, so that the form and its coefficients obey
/// the same bookkeeping under d, wedge and contraction with the radial field.
class Form {
public:
    using Components = std::map<IndexSet, Poly>;

    Form() = default;
    Form(std::size_t ambient_dim, std::size_t arity);

    static Form zero(std::size_t ambient_dim, std::size_t arity) { return Form(ambient_dim, arity); }
    /// The 0-form given by a polynomial.
    static Form function(const Poly& p);
    /// dx_i.
    static Form differential(std::size_t ambient_dim, std::size_t i);
    /// sum_i coefficients[i] dx_i.
    static Form one_form(const std::vector<Poly>& coefficients);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t arity() const noexcept { return k_; }
    const Components& components() const noexcept { return comps_; }
    bool is_zero() const noexcept { return comps_.empty(); }

    Poly component(const IndexSet& idx) const;
    /// Coefficient of dx_i in a one-form.
    Poly coefficient(std::size_t i) const;
    /// The polynomial of a 0-form.
    Poly as_function() const;

    /// Adds p to the component at `idx`, which must be strictly increasing.
    void add_component(const IndexSet& idx, const Poly& p);

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Poly& p, const Form& f);
    friend Form operator*(const Scalar& c, const Form& f);
    friend bool operator==(const Form& a, const Form& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.comps_ == b.comps_;
    }

    /// Same form in a ring with more variables (appended at the end).
    Form extended(std::size_t ambient_dim) const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    Components comps_;
};

/// Polynomial vector field sum_i components[i] d/dx_i.
struct VectorField {
    std::vector<Poly> components;

    std::size_t ambient_dim() const noexcept { return components.size(); }
};

/// Exterior product; zero when the arities add up past the ambient dimension.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative. A top-degree form maps to the zero (n+1)-form.
Form ext_d(const Form& a);

/// Interior product i_X a. Throws PreconditionError on a 0-form.
Form contract(const VectorField& x, const Form& a);

/// R = sum_i x_i d/dx_i.
VectorField radial_field(std::size_t n);

/// Total degree of a form: homogeneous of total degree e when every component
/// is homogeneous of degree e - arity.
Homogeneity total_degree(const Form& a);

/// Whether d(i_R a) + i_R(d a) == e * a. Throws PreconditionError when `a`
/// is not homogeneous.
bool cartan_check(const Form& a, int e);

} // namespace folia
