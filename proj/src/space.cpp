#include "folia/space.hpp"

#include "folia/error.hpp"

namespace folia {

bool CoordinateLess::operator()(const FormCoordinate& a, const FormCoordinate& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GrlexDescending{}(a.second, b.second);
}

namespace {

void index_sets(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(static_cast<int>(i));
        index_sets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

FormSpace::FormSpace(std::size_t ambient_dim, std::size_t arity, int degree)
    : n_(ambient_dim), k_(arity), e_(degree) {
    if (arity > ambient_dim) return;
    std::vector<IndexSet> sets;
    IndexSet cur;
    index_sets(n_, k_, 0, cur, sets);
    const auto monomials = monomials_of_degree(n_, e_ - static_cast<int>(k_));
    for (const auto& idx : sets) {
        for (const auto& m : monomials) {
            index_.emplace(FormCoordinate{idx, m}, coords_.size());
            coords_.emplace_back(idx, m);
        }
    }
}

std::optional<std::size_t> FormSpace::index_of(const FormCoordinate& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Form FormSpace::basis_form(std::size_t j) const {
    const auto& [idx, m] = coords_.at(j);
    Form f(n_, k_);
    f.add_component(idx, Poly::term(m, Scalar(1)));
    return f;
}

Form FormSpace::form_of(std::span<const Scalar> v) const {
    if (v.size() != coords_.size()) throw DimensionMismatch("coordinate vector has wrong length");
    std::map<IndexSet, Poly> comps;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        const auto& [idx, m] = coords_[j];
        auto [it, inserted] = comps.try_emplace(idx, Poly(n_));
        it->second.add_term(m, v[j]);
    }
    Form f(n_, k_);
    for (const auto& [idx, p] : comps) f.add_component(idx, p);
    return f;
}

std::vector<Scalar> FormSpace::vector_of(const Form& f) const {
    if (f.ambient_dim() != n_ || f.arity() != k_) throw DimensionMismatch("form does not belong to this space");
    std::vector<Scalar> v(coords_.size());
    for (const auto& [idx, p] : f.components()) {
        for (const auto& [m, c] : p.terms()) {
            auto j = index_of({idx, m});
            if (!j) throw PreconditionError("form has a term outside the coordinate space");
            v[*j] = c;
        }
    }
    return v;
}

bool FormSpace::contains(const Form& f) const {
    if (f.ambient_dim() != n_ || f.arity() != k_) return false;
    for (const auto& [idx, p] : f.components()) {
        for (const auto& [m, c] : p.terms()) {
            if (!index_of({idx, m})) return false;
        }
    }
    return true;
}

Matrix coefficient_columns(const std::vector<Form>& forms) {
    std::map<FormCoordinate, std::size_t, CoordinateLess> rows;
    for (const auto& f : forms) {
        for (const auto& [idx, p] : f.components()) {
            for (const auto& [m, c] : p.terms()) rows.emplace(FormCoordinate{idx, m}, 0);
        }
    }
    std::size_t next = 0;
    for (auto& [coord, row] : rows) row = next++;

    Matrix out(rows.size(), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        for (const auto& [idx, p] : forms[j].components()) {
            for (const auto& [m, c] : p.terms()) out(rows.at({idx, m}), j) = c;
        }
    }
    return out;
}

} // namespace folia
