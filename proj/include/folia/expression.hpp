#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/form.hpp"

namespace folia {

/// Ordered variable names of an ambient space; position i names x_i.
///
/// Names are identifiers ([A-Za-z][A-Za-z0-9_]*). "i" is the imaginary unit
/// and names starting with 'd' are reserved for differentials, so both are
/// rejected.
class Variables {
public:
    Variables() = default;
    explicit Variables(std::vector<std::string> names);

    /// x, y, z, w, v, u, t, s, r, q, p; beyond eleven: x1, ..., xn.
    static Variables defaults(std::size_t n);
    /// Comma-separated list, e.g. "x,y,z".
    static Variables parse_list(std::string_view text);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Adds one more variable, the first default name not already taken.
    Variables extended() const;

private:
    std::vector<std::string> names_;
};

/// Grammar: sums and differences of products; operators + - * / ^ with
/// integer exponents; integer literals, i for the imaginary unit, declared
/// variables and parentheses. Division is only by nonzero constants, so
/// "3/2*x" is an exact fraction coefficient. No implicit multiplication.
Poly parse_poly(std::string_view text, const Variables& vars);

/// Same grammar plus differentials d<var>; the result must be a one-form.
/// Products of two differentials, powers or quotients of differentials and
/// sums mixing functions with one-forms are rejected.
Form parse_form(std::string_view text, const Variables& vars);

/// A constant expression such as "3/2", "-1" or "1+2*i".
Scalar parse_scalar(std::string_view text);

std::string render(const Poly& p, const Variables& vars);
/// Canonical text; one-forms parse back with parse_form. Higher arities are
/// rendered with "dx*dy" style products for display only.
std::string render(const Form& f, const Variables& vars);

} // namespace folia
