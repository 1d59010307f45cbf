#pragma once

#include "cyclores/modarith.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclores {

/// Prime-field context for the order-l character chi with chi(gamma) = zeta_l.
///
/// gamma is a primitive root mod p (the least one unless the caller picked
/// another), alpha = gamma^((p-1)/l) mod p, and ind is the full discrete-log
/// table: ind[v-1] = Ind_gamma(v) for v in 1..p-1. The table is built once in
/// O(p) by walking the powers of gamma; contexts are immutable afterwards.
struct PrimeContext {
    std::int64_t l = 0;
    std::int64_t p = 0;
    std::int64_t gamma = 0;
    std::int64_t alpha = 0;
    std::vector<std::uint32_t> ind;
    std::vector<std::int64_t> alpha_powers;  // alpha^0 .. alpha^{l-1} mod p

    // Ind_gamma(v); v must not be divisible by p
    std::int64_t index_of(std::int64_t v) const {
        const std::int64_t vm = mod_floor(v, p);
        if (vm == 0) throw std::invalid_argument("index_of: v divisible by p");
        return ind[static_cast<std::size_t>(vm - 1)];
    }
};

/// Smallest g >= 2 generating (Z/pZ)*, checked via g^((p-1)/q) != 1 for every
/// prime q | p-1.
inline std::int64_t least_primitive_root(std::int64_t p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("least_primitive_root: p is not an odd prime");
    const auto factors = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (const auto& [q, e] : factors) {
            (void)e;
            if (pow_mod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>((p - 1) / q),
                        static_cast<std::uint64_t>(p)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("least_primitive_root: no generator found");
}

inline PrimeContext build_context_with_root(std::int64_t l, std::int64_t p, std::int64_t gamma) {
    if (l < 3 || l % 2 == 0 || !is_prime(l)) throw std::invalid_argument("build_context: l is not an odd prime");
    if (!is_prime(p)) throw std::invalid_argument("build_context: p is not prime");
    if ((p - 1) % l != 0) throw std::invalid_argument("build_context: p != 1 (mod l)");
    if (p - 1 > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("build_context: p beyond index-table scale");

    PrimeContext ctx;
    ctx.l = l;
    ctx.p = p;
    ctx.gamma = mod_floor(gamma, p);

    // order of gamma must be exactly p-1
    for (const auto& [q, e] : factorize(p - 1)) {
        (void)e;
        if (pow_mod(static_cast<std::uint64_t>(ctx.gamma), static_cast<std::uint64_t>((p - 1) / q),
                    static_cast<std::uint64_t>(p)) == 1)
            throw std::invalid_argument("build_context: gamma is not a primitive root");
    }

    ctx.alpha = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(ctx.gamma),
                                                  static_cast<std::uint64_t>((p - 1) / l),
                                                  static_cast<std::uint64_t>(p)));

    ctx.ind.assign(static_cast<std::size_t>(p - 1), 0);
    std::int64_t v = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        ctx.ind[static_cast<std::size_t>(v - 1)] = static_cast<std::uint32_t>(k);
        v = static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(ctx.gamma),
                                              static_cast<std::uint64_t>(p)));
    }

    ctx.alpha_powers.reserve(static_cast<std::size_t>(l));
    std::int64_t ap = 1;
    for (std::int64_t k = 0; k < l; ++k) {
        ctx.alpha_powers.push_back(ap);
        ap = static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(ap), static_cast<std::uint64_t>(ctx.alpha),
                                               static_cast<std::uint64_t>(p)));
    }
    return ctx;
}

inline PrimeContext build_context(std::int64_t l, std::int64_t p) {
    if (l < 3 || l % 2 == 0 || !is_prime(l)) throw std::invalid_argument("build_context: l is not an odd prime");
    if (!is_prime(p)) throw std::invalid_argument("build_context: p is not prime");
    if ((p - 1) % l != 0) throw std::invalid_argument("build_context: p != 1 (mod l)");
    return build_context_with_root(l, p, least_primitive_root(p));
}

/// Exponent e with chi(v) = zeta^e, i.e. Ind_gamma(v) mod l.
inline int chi_exponent(const PrimeContext& ctx, std::int64_t v) {
    return static_cast<int>(ctx.index_of(v) % ctx.l);
}

}  // namespace cyclores
