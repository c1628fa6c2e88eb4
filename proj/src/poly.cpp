#include "folia/poly.hpp"

#include <numeric>

#include "folia/error.hpp"

namespace folia {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw PreconditionError("negative exponent in monomial");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t ambient_dim, std::size_t i) {
    if (i >= ambient_dim) throw PreconditionError("variable index out of range");
    Monomial m(ambient_dim);
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
}

Monomial Monomial::extended(std::size_t ambient_dim) const {
    if (ambient_dim < exps_.size()) throw DimensionMismatch("cannot shrink a monomial by extension");
    Monomial m = *this;
    m.exps_.resize(ambient_dim, 0);
    return m;
}

Monomial Monomial::without(std::size_t index) const {
    if (index >= exps_.size()) throw PreconditionError("variable index out of range");
    std::vector<int> e = exps_;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
    m.degree_ += b.degree_;
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] -= b.exps_[i];
    m.degree_ -= b.degree_;
    return m;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.exponents() > b.exponents();
}

Poly Poly::constant(std::size_t ambient_dim, const Scalar& c) {
    Poly p(ambient_dim);
    p.add_term(Monomial(ambient_dim), c);
    return p;
}

Poly Poly::variable(std::size_t ambient_dim, std::size_t i) {
    return term(Monomial::variable(ambient_dim, i), Scalar(1));
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
    Poly p(m.ambient_dim());
    p.add_term(m, c);
    return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar Poly::constant_term() const { return coefficient(Monomial(n_)); }

const Poly::Terms::value_type& Poly::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return *terms_.begin();
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (m.ambient_dim() != n_) throw DimensionMismatch("monomial has wrong number of variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const { return scaled(Scalar(-1)); }

Poly& Poly::operator+=(const Poly& o) {
    if (o.n_ != n_) throw DimensionMismatch("polynomials live in different rings");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.n_ != n_) throw DimensionMismatch("polynomials live in different rings");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("polynomials live in different rings");
    Poly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

Poly Poly::extended(std::size_t ambient_dim) const {
    Poly out(ambient_dim);
    for (const auto& [m, c] : terms_) out.add_term(m.extended(ambient_dim), c);
    return out;
}

Poly Poly::dehomogenized(std::size_t index) const {
    if (index >= n_) throw PreconditionError("variable index out of range");
    Poly out(n_ - 1);
    for (const auto& [m, c] : terms_) out.add_term(m.without(index), c);
    return out;
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    throw PreconditionError("unknown polynomial operation");
}

Poly poly_scale(const Scalar& c, const Poly& p) { return p.scaled(c); }

Poly partial_derivative(const Poly& p, std::size_t i) {
    if (i >= p.ambient_dim()) throw PreconditionError("partial derivative index out of range");
    Poly out(p.ambient_dim());
    for (const auto& [m, c] : p.terms()) {
        const int e = m[i];
        if (e == 0) continue;
        out.add_term(m / Monomial::variable(p.ambient_dim(), i), c * Scalar(e));
    }
    return out;
}

Homogeneity homogeneous_degree(const Poly& p) {
    if (p.is_zero()) return {};
    const int d = p.terms().begin()->first.total_degree();
    // grlex puts the highest degree first and the lowest last
    if (p.terms().rbegin()->first.total_degree() != d) return {Homogeneity::Kind::mixed, 0};
    return {Homogeneity::Kind::homogeneous, d};
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den) {
    if (num.ambient_dim() != den.ambient_dim()) throw DimensionMismatch("polynomials live in different rings");
    if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
    const auto& [lead_m, lead_c] = den.leading_term();
    const Scalar lead_inv = lead_c.inverse();
    Poly quotient(num.ambient_dim());
    Poly rest = num;
    while (!rest.is_zero()) {
        const auto& [m, c] = rest.leading_term();
        if (!lead_m.divides(m)) return std::nullopt;
        Poly step = Poly::term(m / lead_m, c * lead_inv);
        rest -= step * den;
        quotient += step;
    }
    return quotient;
}

Scalar evaluate(const Poly& p, std::span<const Scalar> point) {
    if (point.size() != p.ambient_dim()) throw DimensionMismatch("evaluation point has wrong length");
    Scalar total;
    for (const auto& [m, c] : p.terms()) {
        Scalar value = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (int k = 0; k < m[i]; ++k) value *= point[i];
        }
        total += value;
    }
    return total;
}

Poly pow(const Poly& p, unsigned k) {
    Poly out = Poly::constant(p.ambient_dim(), Scalar(1));
    Poly base = p;
    while (k > 0) {
        if (k & 1U) out = out * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return out;
}

namespace {

void fill_monomials(std::vector<int>& exps, std::size_t pos, int remaining, std::vector<Monomial>& out) {
    if (pos + 1 == exps.size()) {
        exps[pos] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (d < 0 || n == 0) return out;
    std::vector<int> exps(n, 0);
    fill_monomials(exps, 0, d, out);
    return out;
}

} // namespace folia
