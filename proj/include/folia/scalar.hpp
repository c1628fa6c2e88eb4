#pragma once

#include <concepts>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace folia {

/// Exact element of Q(i): a Gaussian rational re + im*i.
///
/// Both parts are GMP rationals kept in lowest terms with a positive
/// denominator. A value with im == 0 is the plain rational case and compares
/// equal to the corresponding rational; no separate tag is stored.
class Scalar {
public:
    Scalar() = default;

    template<std::integral T>
    Scalar(T value) : re_(static_cast<long>(value)) {}

    explicit Scalar(mpq_class re, mpq_class im = 0);

    /// num/den in lowest terms. Throws PreconditionError if den == 0.
    static Scalar fraction(const mpz_class& num, const mpz_class& den);
    static Scalar imaginary_unit();

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    /// True when both parts have denominator one.
    bool is_gaussian_integer() const;

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Throws PreconditionError on zero.
    Scalar inverse() const;

    /// Least common multiple of the denominators of both parts.
    mpz_class denominator_lcm() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Canonical text: "3", "-3/2", "2*i", "-i", "1+2*i", "1/2-i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace folia
