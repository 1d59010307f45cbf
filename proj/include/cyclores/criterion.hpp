#pragma once

#include "cyclores/oracle.hpp"
#include "cyclores/symbol.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclores {

/// S = sum of the inverses of 1..(l-1)/2 mod l. The classification formula
/// divides by S, so S != 0 is what makes the index class recoverable from the
/// symbol exponent.
inline int sum_inverse_halves(long l) {
    if (l < 3 || l % 2 == 0 || !is_prime(static_cast<std::int64_t>(l)))
        throw std::invalid_argument("sum_inverse_halves: l is not an odd prime");
    long s = 0;
    for (long i = 1; i <= (l - 1) / 2; ++i) s = (s + inv_mod(i, l)) % l;
    return static_cast<int>(s);
}

/// All odd primes l <= l_max with S == 0 (mod l). Empty below 1000; the first
/// hit is l = 1093.
inline std::vector<long> conjecture_scan(long l_max) {
    if (l_max < 3) throw std::invalid_argument("conjecture_scan: l_max < 3");
    std::vector<long> out;
    for (long l = 3; l <= l_max; l += 2)
        if (is_prime(static_cast<std::int64_t>(l)) && sum_inverse_halves(l) == 0) out.push_back(l);
    return out;
}

/// Index class of D recovered from the symbol (phi/D)_l alone: the data path
/// touches p only through the coefficients of phi = J(1,1); all symbol
/// arithmetic happens modulo the factors of D.
struct Classification {
    std::int64_t D = 0;
    int S = 0;
    int t = 0;          // exponent of (phi/D)_l
    int ind_class = 0;  // Ind_gamma(D) mod l; valid only when ind_class_available
    bool ind_class_available = false;
    bool is_residue = false;
};

/// classify with a precomputed phi = normalized_jacobi(ctx); useful when many
/// D share one context.
inline Classification classify_with(const PrimeContext& ctx, const CycInt& phi, std::int64_t D,
                                    std::uint64_t seed = 0) {
    const int l = static_cast<int>(ctx.l);
    if (mod_floor(D, ctx.p) == 0) throw std::invalid_argument("classify: gcd(D, p) != 1");
    if (D == 0 || gcd_int(D, l) != 1) throw std::invalid_argument("classify: gcd(D, l) != 1");
    Classification c;
    c.D = D;
    c.S = sum_inverse_halves(l);
    c.t = symbol_rational_base(phi, D, seed).exp;
    c.is_residue = c.t == 0;
    if (c.S != 0) {
        c.ind_class = static_cast<int>((static_cast<long>(c.t) * inv_mod(c.S, l)) % l);
        c.ind_class_available = true;
    }
    return c;
}

inline Classification classify(const PrimeContext& ctx, std::int64_t D, std::uint64_t seed = 0) {
    return classify_with(ctx, normalized_jacobi(ctx), D, seed);
}

/// The two mod-l^2 congruences deciding the class of D = l from the Jacobi
/// coefficients a_h(n), cross-checked against the mod-p oracle. The two
/// congruences differ by 2l(l-1), so at most one can hold.
struct CriterionLReport {
    BigInt residue_value;  // (l-1)(p-l+1) + T mod l^2; zero iff class 0
    BigInt ind1_value;     // (l-1)(p-3l+1) + T mod l^2; zero iff class 1
    bool holds_residue = false;
    bool holds_ind1 = false;
    int oracle_class = 0;
    bool consistent = false;
};

inline CriterionLReport criterion_for_l(const PrimeContext& ctx) {
    const long l = ctx.l;
    BigInt t = 0;
    for (long n = 1; n <= l - 2; ++n) {
        const auto a = a_coeffs(ctx, n);
        for (long h = 1; h <= l - 1; ++h) t += a[static_cast<std::size_t>(h - 1)] * (2 * h - l + 1);
    }
    const BigInt l2 = BigInt(l) * l;
    CriterionLReport rep;
    rep.residue_value = ((l - 1) * (ctx.p - l + 1) + t) % l2;
    if (rep.residue_value < 0) rep.residue_value += l2;
    rep.ind1_value = ((l - 1) * (ctx.p - 3 * l + 1) + t) % l2;
    if (rep.ind1_value < 0) rep.ind1_value += l2;
    rep.holds_residue = rep.residue_value == 0;
    rep.holds_ind1 = rep.ind1_value == 0;
    rep.oracle_class = ind_class_oracle(ctx, l);
    rep.consistent = (rep.holds_residue == (rep.oracle_class == 0)) && (rep.holds_ind1 == (rep.oracle_class == 1));
    return rep;
}

/// The parity criteria deciding the class of D = 2 from a_h(1). The second
/// parity is only a criterion when 2 is a nonresidue, and the consistency
/// flag honors that hypothesis.
struct CriterionTwoReport {
    int coeff_sum_parity = 0;   // parity of sum_i a_i(1)
    int last_coeff_parity = 0;  // parity of a_{l-2}(1)
    bool holds_residue = false;
    bool holds_ind1 = false;
    int oracle_class = 0;
    bool consistent = false;
};

inline CriterionTwoReport criterion_for_2(const PrimeContext& ctx) {
    const long l = ctx.l;
    const auto a = a_coeffs(ctx, 1);
    BigInt sum = 0;
    for (const auto& c : a) sum += c;
    CriterionTwoReport rep;
    rep.coeff_sum_parity = static_cast<int>(mpz_fdiv_ui(sum.get_mpz_t(), 2));
    rep.last_coeff_parity = static_cast<int>(mpz_fdiv_ui(a[static_cast<std::size_t>(l - 2 - 1)].get_mpz_t(), 2));
    rep.holds_residue = rep.coeff_sum_parity == 0;
    rep.holds_ind1 = rep.last_coeff_parity == 1;
    rep.oracle_class = ind_class_oracle(ctx, 2);
    rep.consistent = (rep.holds_residue == (rep.oracle_class == 0)) &&
                     (rep.oracle_class == 0 || rep.holds_ind1 == (rep.oracle_class == 1));
    return rep;
}

}  // namespace cyclores
