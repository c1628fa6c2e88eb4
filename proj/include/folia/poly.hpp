#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "folia/scalar.hpp"

namespace folia {

/// Exponent vector of a monomial. Its length is the ambient dimension.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t ambient_dim) : exps_(ambient_dim, 0) {}
    explicit Monomial(std::vector<int> exponents);

    /// x_i in an n-variable ring.
    static Monomial variable(std::size_t ambient_dim, std::size_t i);

    std::size_t ambient_dim() const noexcept { return exps_.size(); }
    int total_degree() const noexcept { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const noexcept { return exps_; }

    /// Same monomial with zero exponents appended up to `ambient_dim`.
    Monomial extended(std::size_t ambient_dim) const;
    /// Removes the variable at `index`; its exponent is discarded, which is
    /// the substitution x_index = 1.
    Monomial without(std::size_t index) const;

    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded lexicographic order: higher total degree first, ties broken
/// lexicographically with x_1 > x_2 > ... > x_n. This is the single global
/// monomial order of the library; every container iterates in it.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Result of a homogeneity test. The zero polynomial gets its own kind.
struct Homogeneity {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int degree = 0; // meaningful only for Kind::homogeneous

    bool is_zero() const noexcept { return kind == Kind::zero; }
    bool is_homogeneous() const noexcept { return kind == Kind::homogeneous; }
    bool is_mixed() const noexcept { return kind == Kind::mixed; }
    std::optional<int> value() const {
        return is_homogeneous() ? std::optional<int>(degree) : std::nullopt;
    }
    friend bool operator==(const Homogeneity&, const Homogeneity&) = default;
};

/// Sparse polynomial in a fixed number of variables with Gaussian rational
/// coefficients. No zero coefficient is ever stored, so two polynomials are
/// equal iff their term maps are identical.
class Poly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexDescending>;

    explicit Poly(std::size_t ambient_dim = 0) : n_(ambient_dim) {}

    static Poly constant(std::size_t ambient_dim, const Scalar& c);
    static Poly variable(std::size_t ambient_dim, std::size_t i);
    static Poly term(const Monomial& m, const Scalar& c);

    std::size_t ambient_dim() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;
    /// The value of the constant term.
    Scalar constant_term() const;
    /// Leading (largest in grlex) term. Requires a nonzero polynomial.
    const Terms::value_type& leading_term() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }
    friend Poly operator*(const Poly& p, const Scalar& c) { return p.scaled(c); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    Poly scaled(const Scalar& c) const;
    /// Embedding into a ring with more variables (appended at the end).
    Poly extended(std::size_t ambient_dim) const;
    /// Substitutes 1 for the variable at `index` and removes it.
    Poly dehomogenized(std::size_t index) const;

private:
    std::size_t n_;
    Terms terms_;
};

enum class PolyOp { add, sub, mul };

/// Ring operation on two polynomials of the same ambient dimension.
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);
Poly poly_scale(const Scalar& c, const Poly& p);

/// d p / d x_i with 0-based i. Throws PreconditionError if i >= ambient_dim.
Poly partial_derivative(const Poly& p, std::size_t i);

Homogeneity homogeneous_degree(const Poly& p);

/// q with num == q*den exactly, or nullopt if den does not divide num.
/// Throws PreconditionError on a zero divisor.
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

/// Exact value at `point` (length must equal ambient_dim).
Scalar evaluate(const Poly& p, std::span<const Scalar> point);

Poly pow(const Poly& p, unsigned k);

/// All monomials of total degree d in n variables, in grlex-descending order.
/// Empty when d < 0.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

} // namespace folia
