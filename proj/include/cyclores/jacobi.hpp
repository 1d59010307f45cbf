#pragma once

#include "cyclores/cyclotomic.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclores {

/// Jacobi sum J(i,j)_l = sum over v in F_p^* \ {-1} of chi^i(v) chi^j(v+1).
///
/// Accumulates the l root-of-unity counters in one O(p) pass over the index
/// table and canonicalizes once at the end. J(0,0) comes out as the rational
/// constant p-2.
inline CycInt jacobi_sum(const PrimeContext& ctx, long i, long j) {
    const int l = static_cast<int>(ctx.l);
    const long im = mod_floor(i, l);
    const long jm = mod_floor(j, l);
    std::vector<long> counts(static_cast<std::size_t>(l), 0);
    for (std::int64_t v = 1; v <= ctx.p - 2; ++v) {
        const std::int64_t e =
            (im * ctx.ind[static_cast<std::size_t>(v - 1)] + jm * ctx.ind[static_cast<std::size_t>(v)]) % l;
        ++counts[static_cast<std::size_t>(e)];
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(l - 1));
    for (int h = 1; h < l; ++h)
        coeffs[static_cast<std::size_t>(h - 1)] = counts[static_cast<std::size_t>(h)] - counts[0];
    return CycInt::from_coeffs(l, std::move(coeffs));
}

/// Coefficients (a_1(n), ..., a_{l-1}(n)) of J(1, n) in the basis
/// {zeta, ..., zeta^{l-1}}; defined for 1 <= n <= l-2.
inline std::vector<BigInt> a_coeffs(const PrimeContext& ctx, long n) {
    if (n < 1 || n > ctx.l - 2) throw std::invalid_argument("a_coeffs: n out of range [1, l-2]");
    return jacobi_sum(ctx, 1, n).coeffs();
}

/// J(1,1) with its two theorem-level checks asserted: the jet is (l-1, 0)
/// (J == -1 mod (1-zeta)^2) and J * sigma_{l-1}(J) == p. Failure of either
/// means an implementation bug, hence logic_error.
inline CycInt normalized_jacobi(const PrimeContext& ctx) {
    const int l = static_cast<int>(ctx.l);
    CycInt j = jacobi_sum(ctx, 1, 1);
    if (!(one_jet(j) == Jet{l - 1, 0})) throw std::logic_error("normalized_jacobi: jet is not (l-1, 0)");
    if (j * galois(j, l - 1) != CycInt::from_integer(l, BigInt(static_cast<long>(ctx.p))))
        throw std::logic_error("normalized_jacobi: |J|^2 != p");
    return j;
}

/// Outcome of checking J(1,1) against the normalized-generator product
/// (-1)^{(l+1)/2} prod_{i=1}^{(l-1)/2} sigma_{inv(i)}(K) with K the
/// normalized generator of P_1.
struct GeneratorProductReport {
    CycInt generator;  // K
    CycInt product;    // signed product of the sigma_{inv(i)}(K)
    CycInt jacobi;     // J(1,1)
    int sign = 1;
    bool equal = false;
};

inline GeneratorProductReport verify_generator_product(const PrimeContext& ctx) {
    const int l = static_cast<int>(ctx.l);
    const CycInt k = prime_generator(ctx);
    const int sign = ((l + 1) / 2) % 2 == 0 ? 1 : -1;
    CycInt prod = CycInt::from_integer(l, sign);
    for (long i = 1; i <= (l - 1) / 2; ++i) prod = prod * galois(k, inv_mod(i, l));
    GeneratorProductReport rep{k, prod, normalized_jacobi(ctx), sign, false};
    rep.equal = rep.product == rep.jacobi;
    return rep;
}

/// Solution of 4p = L^2 + 27 M^2 with L == 1 (mod 3), read off J(1,1)_3.
/// The sign of M follows the context's primitive root; (L, |M|) is
/// root-independent.
struct CubicPartition {
    std::int64_t L = 0;
    std::int64_t M = 0;
};

inline CubicPartition cubic_partition(const PrimeContext& ctx) {
    if (ctx.l != 3) throw std::invalid_argument("cubic_partition: context order must be 3");
    const CycInt j = normalized_jacobi(ctx);
    // rewrite A zeta + B zeta^2 with constant term: -B + (A-B) omega, then
    // match (L+3M)/2 + 3M omega
    const BigInt x = -j.coeff(2);
    const BigInt y = j.coeff(1) - j.coeff(2);
    if (y % 3 != 0) throw std::logic_error("cubic_partition: omega coefficient not divisible by 3");
    const BigInt m = y / 3;
    const BigInt big_l = 2 * x - y;
    CubicPartition part;
    part.L = static_cast<std::int64_t>(big_l.get_si());
    part.M = static_cast<std::int64_t>(m.get_si());
    if (4 * ctx.p != part.L * part.L + 27 * part.M * part.M || mod_floor(part.L, 3) != 1)
        throw std::logic_error("cubic_partition: partition check failed");
    return part;
}

inline CubicPartition cubic_partition(std::int64_t p) {
    if (!is_prime(p) || (p - 1) % 3 != 0) throw std::invalid_argument("cubic_partition: p != 1 (mod 3)");
    return cubic_partition(build_context(3, p));
}

/// The order-3 Euler table for one D: D^{(p-1)/3} lands on 1 or on one of the
/// two branch values (L+9M)/(L-9M), (L-9M)/(L+9M) mod p.
struct CubicBranchReport {
    std::int64_t D = 0;
    std::int64_t power = 0;         // D^{(p-1)/3} mod p
    std::int64_t branch_plus = 0;   // (L+9M)/(L-9M) mod p
    std::int64_t branch_minus = 0;  // (L-9M)/(L+9M) mod p
    int branch = 0;                 // 0 residue, +1 / -1 the matching branch
};

inline CubicBranchReport euler_cubic_table(const PrimeContext& ctx, std::int64_t D) {
    if (ctx.l != 3) throw std::invalid_argument("euler_cubic_table: context order must be 3");
    if (mod_floor(D, ctx.p) == 0) throw std::invalid_argument("euler_cubic_table: gcd(D, p) != 1");
    const CubicPartition part = cubic_partition(ctx);
    const auto up = static_cast<std::uint64_t>(ctx.p);
    const std::uint64_t plus = static_cast<std::uint64_t>(mod_floor(part.L + 9 * part.M, ctx.p));
    const std::uint64_t minus = static_cast<std::uint64_t>(mod_floor(part.L - 9 * part.M, ctx.p));
    if (plus == 0 || minus == 0) throw std::logic_error("euler_cubic_table: branch denominator vanished");

    CubicBranchReport rep;
    rep.D = D;
    rep.branch_plus = static_cast<std::int64_t>(
        mul_mod(plus, static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(minus), ctx.p)), up));
    rep.branch_minus = static_cast<std::int64_t>(
        mul_mod(minus, static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(plus), ctx.p)), up));
    rep.power = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(mod_floor(D, ctx.p)),
                                                  static_cast<std::uint64_t>((ctx.p - 1) / 3), up));
    if (rep.power == 1)
        rep.branch = 0;
    else if (rep.power == rep.branch_plus)
        rep.branch = 1;
    else if (rep.power == rep.branch_minus)
        rep.branch = -1;
    else
        throw std::logic_error("euler_cubic_table: power matched no branch");
    return rep;
}

}  // namespace cyclores
