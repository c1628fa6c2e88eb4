#include "modular.hpp"

#include <cmath>

#include "folia/error.hpp"

namespace folia::modular {

namespace {

constexpr double kPointBudget = 250000.0;

u64 reduce_integer(const mpz_class& z, u64 p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::optional<u64> reduce_rational(const mpq_class& q, u64 p) {
    const u64 den = reduce_integer(q.get_den(), p);
    if (den == 0) return std::nullopt;
    return reduce_integer(q.get_num(), p) * inv_mod(den, p) % p;
}

bool is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

double point_count(std::size_t n, double p) { return (std::pow(p, static_cast<double>(n)) - 1.0) / (p - 1.0); }

} // namespace

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 out = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) out = out * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return out;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 sqrt_minus_one(u64 p) {
    for (u64 c = 2; c < p; ++c) {
        // a quadratic non-residue c gives c^((p-1)/4) with square -1
        if (pow_mod(c, (p - 1) / 2, p) == p - 1) return pow_mod(c, (p - 1) / 4, p);
    }
    throw PreconditionError("no square root of -1 modulo the chosen prime");
}

std::vector<u64> primes_one_mod_four(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 q = lo; q <= hi; ++q) {
        if (q % 4 == 1 && is_prime(q)) out.push_back(q);
    }
    return out;
}

u64 PolyModP::evaluate(std::span<const u64> point, u64 p) const {
    u64 total = 0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        u64 v = coeffs[t];
        const auto& e = exponents[t];
        for (std::size_t i = 0; i < e.size() && v != 0; ++i) {
            for (int k = 0; k < e[i]; ++k) v = v * point[i] % p;
        }
        total = (total + v) % p;
    }
    return total;
}

std::optional<PolyModP> reduce(const Poly& poly, u64 p, u64 i_mod_p) {
    PolyModP out;
    for (const auto& [m, c] : poly.terms()) {
        auto re = reduce_rational(c.real(), p);
        auto im = reduce_rational(c.imag(), p);
        if (!re || !im) return std::nullopt;
        const u64 v = (*re + *im * i_mod_p) % p;
        if (v == 0) continue;
        out.exponents.push_back(m.exponents());
        out.coeffs.push_back(v);
    }
    return out;
}

std::size_t rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const u64 inv = inv_mod(rows[rank][c], p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const u64 f = rows[r][c] * inv % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) rows[r][j] = (rows[r][j] + (p - f) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

u64 pick_prime(std::size_t n, std::mt19937_64& rng) {
    u64 hi = 5;
    while (point_count(n, static_cast<double>(hi + 1)) <= kPointBudget && hi < 5000) ++hi;
    const u64 lo = std::max<u64>(5, hi / 2);
    auto candidates = primes_one_mod_four(lo, hi);
    if (candidates.empty()) candidates = primes_one_mod_four(5, std::max<u64>(hi, 13));
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

} // namespace folia::modular
