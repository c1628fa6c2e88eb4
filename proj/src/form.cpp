#include "folia/form.hpp"

#include <algorithm>

#include "folia/error.hpp"

namespace folia {

namespace {

bool strictly_increasing(const IndexSet& idx, std::size_t n) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || static_cast<std::size_t>(idx[j]) >= n) return false;
        if (j > 0 && idx[j - 1] >= idx[j]) return false;
    }
    return true;
}

// Sorts the concatenation a ++ b. Returns 0 when an index repeats, otherwise
// the sign of the sorting permutation.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    int inversions = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return (inversions % 2 == 0) ? 1 : -1;
}

} // namespace

Form::Form(std::size_t ambient_dim, std::size_t arity) : n_(ambient_dim), k_(arity) {}

Form Form::function(const Poly& p) {
    Form f(p.ambient_dim(), 0);
    f.add_component({}, p);
    return f;
}

Form Form::differential(std::size_t ambient_dim, std::size_t i) {
    if (i >= ambient_dim) throw PreconditionError("differential index out of range");
    Form f(ambient_dim, 1);
    f.add_component({static_cast<int>(i)}, Poly::constant(ambient_dim, Scalar(1)));
    return f;
}

Form Form::one_form(const std::vector<Poly>& coefficients) {
    const std::size_t n = coefficients.size();
    Form f(n, 1);
    for (std::size_t i = 0; i < n; ++i) f.add_component({static_cast<int>(i)}, coefficients[i]);
    return f;
}

Poly Form::component(const IndexSet& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Poly(n_) : it->second;
}

Poly Form::coefficient(std::size_t i) const {
    if (k_ != 1) throw PreconditionError("coefficient(i) requires a one-form");
    return component({static_cast<int>(i)});
}

Poly Form::as_function() const {
    if (k_ != 0) throw PreconditionError("as_function requires a 0-form");
    return component({});
}

void Form::add_component(const IndexSet& idx, const Poly& p) {
    if (p.ambient_dim() != n_) throw DimensionMismatch("component lives in a different ring");
    if (idx.size() != k_ || !strictly_increasing(idx, n_)) {
        throw PreconditionError("form component index set is not strictly increasing of the right arity");
    }
    if (p.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(idx, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Form Form::operator-() const { return Scalar(-1) * *this; }

Form& Form::operator+=(const Form& o) {
    if (o.n_ != n_ || o.k_ != k_) throw DimensionMismatch("forms differ in ambient dimension or arity");
    for (const auto& [idx, p] : o.comps_) add_component(idx, p);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.n_ != n_ || o.k_ != k_) throw DimensionMismatch("forms differ in ambient dimension or arity");
    for (const auto& [idx, p] : o.comps_) add_component(idx, -p);
    return *this;
}

Form operator*(const Poly& p, const Form& f) {
    if (p.ambient_dim() != f.n_) throw DimensionMismatch("polynomial and form live in different rings");
    Form out(f.n_, f.k_);
    for (const auto& [idx, q] : f.comps_) out.add_component(idx, p * q);
    return out;
}

Form operator*(const Scalar& c, const Form& f) {
    Form out(f.n_, f.k_);
    for (const auto& [idx, q] : f.comps_) out.add_component(idx, q.scaled(c));
    return out;
}

Form Form::extended(std::size_t ambient_dim) const {
    Form out(ambient_dim, k_);
    for (const auto& [idx, p] : comps_) out.add_component(idx, p.extended(ambient_dim));
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("wedge of forms in different dimensions");
    Form out(a.ambient_dim(), a.arity() + b.arity());
    if (a.arity() + b.arity() > a.ambient_dim()) return out;
    IndexSet merged;
    for (const auto& [ia, pa] : a.components()) {
        for (const auto& [ib, pb] : b.components()) {
            const int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            Poly prod = pa * pb;
            out.add_component(merged, sign > 0 ? prod : -prod);
        }
    }
    return out;
}

Form ext_d(const Form& a) {
    const std::size_t n = a.ambient_dim();
    Form out(n, a.arity() + 1);
    if (a.arity() >= n) return out;
    IndexSet merged;
    for (const auto& [idx, p] : a.components()) {
        for (std::size_t i = 0; i < n; ++i) {
            // dx_i ^ dx_idx
            const int sign = merge_sign({static_cast<int>(i)}, idx, merged);
            if (sign == 0) continue;
            Poly dp = partial_derivative(p, i);
            if (dp.is_zero()) continue;
            out.add_component(merged, sign > 0 ? dp : -dp);
        }
    }
    return out;
}

Form contract(const VectorField& x, const Form& a) {
    if (x.ambient_dim() != a.ambient_dim()) throw DimensionMismatch("vector field and form differ in dimension");
    if (a.arity() == 0) throw PreconditionError("cannot contract a 0-form");
    Form out(a.ambient_dim(), a.arity() - 1);
    for (const auto& [idx, p] : a.components()) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Poly& xj = x.components[static_cast<std::size_t>(idx[j])];
            if (xj.is_zero()) continue;
            IndexSet rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
            Poly term = xj * p;
            out.add_component(rest, (j % 2 == 0) ? term : -term);
        }
    }
    return out;
}

VectorField radial_field(std::size_t n) {
    if (n == 0) throw PreconditionError("radial field needs at least one variable");
    VectorField r;
    r.components.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.components.push_back(Poly::variable(n, i));
    return r;
}

Homogeneity total_degree(const Form& a) {
    Homogeneity out;
    for (const auto& [idx, p] : a.components()) {
        const Homogeneity h = homogeneous_degree(p);
        if (h.is_mixed()) return {Homogeneity::Kind::mixed, 0};
        const int d = h.degree + static_cast<int>(a.arity());
        if (out.is_zero()) {
            out = {Homogeneity::Kind::homogeneous, d};
        } else if (out.degree != d) {
            return {Homogeneity::Kind::mixed, 0};
        }
    }
    return out;
}

bool cartan_check(const Form& a, int e) {
    if (total_degree(a).is_mixed()) throw PreconditionError("Cartan check needs a homogeneous form");
    const VectorField r = radial_field(a.ambient_dim());
    Form lie = contract(r, ext_d(a));
    if (a.arity() > 0) lie += ext_d(contract(r, a));
    return lie == Scalar(e) * a;
}

} // namespace folia
