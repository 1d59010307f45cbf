#pragma once

#include "cyclores/modp.hpp"

#include <cstdint>
#include <stdexcept>

namespace cyclores {

/// Ground truth by direct mod-p arithmetic: D^{(p-1)/l} is matched against the
/// precomputed powers of alpha; the exponent j equals Ind_gamma(D) mod l. O(l)
/// per query after one modular exponentiation, no index table needed.
inline int ind_class_oracle(const PrimeContext& ctx, std::int64_t D) {
    const std::int64_t dm = mod_floor(D, ctx.p);
    if (dm == 0) throw std::invalid_argument("ind_class_oracle: gcd(D, p) != 1");
    const std::uint64_t r = pow_mod(static_cast<std::uint64_t>(dm), static_cast<std::uint64_t>((ctx.p - 1) / ctx.l),
                                    static_cast<std::uint64_t>(ctx.p));
    for (int j = 0; j < ctx.l; ++j)
        if (static_cast<std::uint64_t>(ctx.alpha_powers[static_cast<std::size_t>(j)]) == r) return j;
    throw std::logic_error("ind_class_oracle: power matched no alpha power");
}

}  // namespace cyclores
