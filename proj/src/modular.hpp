#pragma once

// Reduction of Gaussian-rational polynomials modulo small primes p = 1 (mod 4),
// used by the probabilistic genericity checks.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "folia/poly.hpp"

namespace folia::modular {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p);
u64 inv_mod(u64 a, u64 p);
/// A square root of -1 modulo p (p = 1 mod 4).
u64 sqrt_minus_one(u64 p);

/// Primes q with q = 1 (mod 4) and lo <= q <= hi.
std::vector<u64> primes_one_mod_four(u64 lo, u64 hi);

/// Polynomial with coefficients in F_p.
struct PolyModP {
    std::vector<std::vector<int>> exponents;
    std::vector<u64> coeffs;

    u64 evaluate(std::span<const u64> point, u64 p) const;
};

/// Reduction of p modulo a prime; nullopt when a denominator vanishes mod p.
std::optional<PolyModP> reduce(const Poly& poly, u64 p, u64 i_mod_p);

/// Rank of a small dense matrix over F_p (rows are copied).
std::size_t rank_mod_p(std::vector<std::vector<u64>> rows, u64 p);

/// Picks a prime for enumerating P^{n-1}(F_p) within a point budget.
u64 pick_prime(std::size_t n, std::mt19937_64& rng);

/// Calls visit(point) for one representative of every point of P^{n-1}(F_p):
/// the first nonzero coordinate is one.
template<typename Visit>
void for_each_projective_point(std::size_t n, u64 p, Visit&& visit) {
    std::vector<u64> point(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(point.begin(), point.end(), 0);
        point[lead] = 1;
        const std::size_t free = n - lead - 1;
        // odometer over the coordinates after the leading one
        while (true) {
            visit(std::span<const u64>(point));
            std::size_t pos = 0;
            while (pos < free) {
                u64& c = point[n - 1 - pos];
                if (++c < p) break;
                c = 0;
                ++pos;
            }
            if (pos == free) break;
        }
    }
}

} // namespace folia::modular
