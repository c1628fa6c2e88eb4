#include "folia/scalar.hpp"

#include <ostream>

#include "folia/error.hpp"

namespace folia {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

bool Scalar::is_gaussian_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero scalar");
    if (is_real()) return Scalar(1 / re_);
    const mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

mpz_class Scalar::denominator_lcm() const {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw PreconditionError("division by zero scalar");
    if (is_real() && o.is_real()) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

// "i", "-i", "3*i", "-3/2*i"
std::string imaginary_text(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
}

} // namespace

std::string Scalar::to_string() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return imaginary_text(im_);
    std::string out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
    return out + imaginary_text(im_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace folia
