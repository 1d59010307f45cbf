#pragma once

#include "cyclores/jacobi.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cyclores {

/// Value of an l-th power residue symbol: Zero, or the root of unity zeta^exp.
struct SymbolValue {
    bool zero = false;
    int exp = 0;  // meaningful only when !zero; reduced mod l

    static SymbolValue zero_value() { return {true, 0}; }
    static SymbolValue root(long e, int l) { return {false, static_cast<int>(mod_floor(e, l))}; }
    bool operator==(const SymbolValue&) const = default;
};

/// Residue symbol modulo the degree-one prime P_k = (p, zeta - alpha^k):
/// reduce via zeta -> alpha^k, raise to (p-1)/l, match the result against the
/// powers of alpha, and convert back through the embedding (zeta^j -> alpha^{kj}).
inline SymbolValue symbol_mod_degree1(const PrimeContext& ctx, const CycInt& a, long k) {
    const int l = static_cast<int>(ctx.l);
    if (a.order() != l) throw std::invalid_argument("symbol_mod_degree1: order mismatch with context");
    if (k < 1 || k > l - 1) throw std::invalid_argument("symbol_mod_degree1: k out of range [1, l-1]");
    const auto up = static_cast<std::uint64_t>(ctx.p);
    const std::uint64_t ak = pow_mod(static_cast<std::uint64_t>(ctx.alpha), static_cast<std::uint64_t>(k), up);
    std::uint64_t image = 0;
    std::uint64_t apow = 1;
    for (int h = 1; h < l; ++h) {
        apow = mul_mod(apow, ak, up);
        image = (image + mul_mod(mpz_fdiv_ui(a.coeff(h).get_mpz_t(), up), apow, up)) % up;
    }
    if (image == 0) return SymbolValue::zero_value();
    const std::uint64_t r = pow_mod(image, static_cast<std::uint64_t>((ctx.p - 1) / l), up);
    for (int s = 0; s < l; ++s)
        if (static_cast<std::uint64_t>(ctx.alpha_powers[static_cast<std::size_t>(s)]) == r)
            return SymbolValue::root(s * inv_mod(k, l), l);
    throw std::logic_error("symbol_mod_degree1: residue power is not a root of unity");
}

/// Monic irreducible degree-f divisor of Phi_l over F_q, together with the
/// residue of x (the image of zeta) in F_q[x]/(poly).
struct ResidueFieldFactor {
    std::int64_t q = 0;
    int f = 0;
    std::vector<std::int64_t> poly;        // a_0..a_f, a_f == 1
    std::vector<std::int64_t> zeta_image;  // x mod poly, degree < f
};

namespace fq {

// dense polynomials over F_q, coefficients low to high, trimmed
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], q)) % q;
    }
    trim(r);
    return r;
}

// remainder of a modulo monic m
inline Poly rem(Poly a, const Poly& m, std::uint64_t q) {
    trim(a);
    while (a.size() >= m.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - m.size();
        if (lead != 0)
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                a[shift + i] = (a[shift + i] + q - mul_mod(lead, m[i], q)) % q;
        a.pop_back();
        trim(a);
    }
    return a;
}

// quotient of a by monic m
inline Poly quot(Poly a, const Poly& m, std::uint64_t q) {
    trim(a);
    if (a.size() < m.size()) return {};
    Poly out(a.size() - m.size() + 1, 0);
    while (a.size() >= m.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - m.size();
        out[shift] = lead;
        if (lead != 0)
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                a[shift + i] = (a[shift + i] + q - mul_mod(lead, m[i], q)) % q;
        a.pop_back();
        trim(a);
    }
    return out;
}

inline Poly make_monic(Poly a, std::uint64_t q) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    const std::uint64_t inv =
        static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(a.back()), static_cast<std::int64_t>(q)));
    for (auto& c : a) c = mul_mod(c, inv, q);
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t q) {
    a = make_monic(std::move(a), q);
    b = make_monic(std::move(b), q);
    while (!b.empty()) {
        Poly r = make_monic(rem(std::move(a), b, q), q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly powmod(Poly base, const BigInt& exp, const Poly& m, std::uint64_t q) {
    Poly r{1};
    if (exp == 0) return r;
    base = rem(std::move(base), m, q);
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, q), m, q);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = rem(mul(r, base, q), m, q);
    }
    return r;
}

}  // namespace fq

namespace detail {

// equal-degree splitter for a squarefree product of degree-f irreducibles
inline void split_equal_degree(fq::Poly h, int f, std::uint64_t q, std::mt19937_64& rng,
                               std::vector<fq::Poly>& out) {
    if (h.size() == static_cast<std::size_t>(f + 1)) {
        out.push_back(std::move(h));
        return;
    }
    const std::size_t deg = h.size() - 1;
    BigInt half_order;  // (q^f - 1) / 2, used for odd q
    if (q != 2) {
        mpz_ui_pow_ui(half_order.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(f));
        half_order = (half_order - 1) / 2;
    }
    while (true) {
        fq::Poly r(deg, 0);
        for (auto& c : r) c = rng() % q;
        fq::trim(r);
        if (r.empty()) continue;
        fq::Poly g;
        if (q == 2) {
            // additive trace map r + r^2 + r^4 + ... splits over F_2
            fq::Poly t;
            fq::Poly cur = fq::rem(r, h, q);
            for (int i = 0; i < f; ++i) {
                t.resize(std::max(t.size(), cur.size()), 0);
                for (std::size_t j = 0; j < cur.size(); ++j) t[j] ^= cur[j];
                cur = fq::rem(fq::mul(cur, cur, q), h, q);
            }
            fq::trim(t);
            g = fq::gcd(h, t, q);
        } else {
            fq::Poly w = fq::powmod(r, half_order, h, q);
            if (w.empty()) continue;
            w[0] = (w[0] + q - 1) % q;  // w - 1
            fq::trim(w);
            g = fq::gcd(h, w, q);
        }
        if (g.size() > 1 && g.size() < h.size()) {
            fq::Poly rest = fq::quot(h, g, q);
            split_equal_degree(std::move(g), f, q, rng, out);
            split_equal_degree(std::move(rest), f, q, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Factor Phi_l over F_q (q prime, q != l) into its (l-1)/f monic irreducible
/// factors, f the order of q mod l. The randomized splitting is driven by the
/// given seed, but factors are sorted by coefficient sequence, so the output
/// is identical for every seed.
inline std::vector<ResidueFieldFactor> factor_cyclotomic_mod_q(int l, std::int64_t q, std::uint64_t seed = 0) {
    if (l < 3 || l % 2 == 0 || !is_prime(static_cast<std::int64_t>(l)))
        throw std::invalid_argument("factor_cyclotomic_mod_q: l is not an odd prime");
    if (!is_prime(q)) throw std::invalid_argument("factor_cyclotomic_mod_q: q is not prime");
    if (q == l) throw std::invalid_argument("factor_cyclotomic_mod_q: q = l is ramified");

    const auto uq = static_cast<std::uint64_t>(q);
    const int f = static_cast<int>(multiplicative_order(q, l));
    const fq::Poly phi(static_cast<std::size_t>(l), 1);  // x^{l-1} + ... + x + 1

    std::vector<fq::Poly> polys;
    if (f == l - 1) {
        polys.push_back(phi);
    } else {
        std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(l) << 32) ^ static_cast<std::uint64_t>(q));
        detail::split_equal_degree(phi, f, uq, rng, polys);
    }
    std::sort(polys.begin(), polys.end());

    std::vector<ResidueFieldFactor> out;
    out.reserve(polys.size());
    for (const auto& poly : polys) {
        ResidueFieldFactor fac;
        fac.q = q;
        fac.f = f;
        fac.poly.assign(poly.begin(), poly.end());
        const fq::Poly zi = fq::rem(fq::Poly{0, 1}, poly, uq);
        fac.zeta_image.assign(zi.begin(), zi.end());
        out.push_back(std::move(fac));
    }
    return out;
}

/// Residue symbol modulo the rational prime q != l: the product of the symbols
/// at the primes of Z[zeta_l] above q, each evaluated in its residue field
/// F_{q^f} by raising the image of a to (q^f - 1)/l and matching the resulting
/// root of unity against the powers of the zeta image. Zero if any factor
/// image vanishes.
inline SymbolValue symbol_mod_rational_prime(const CycInt& a, std::int64_t q, std::uint64_t seed = 0) {
    const int l = a.order();
    const auto factors = factor_cyclotomic_mod_q(l, q, seed);
    const auto uq = static_cast<std::uint64_t>(q);

    long total = 0;
    for (const auto& fac : factors) {
        fq::Poly modulus(fac.poly.begin(), fac.poly.end());
        fq::Poly image(static_cast<std::size_t>(l), 0);
        for (int h = 1; h < l; ++h) image[static_cast<std::size_t>(h)] = mpz_fdiv_ui(a.coeff(h).get_mpz_t(), uq);
        image = fq::rem(std::move(image), modulus, uq);
        if (image.empty()) return SymbolValue::zero_value();

        BigInt exp;
        mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(uq), static_cast<unsigned long>(fac.f));
        exp = (exp - 1) / l;
        const fq::Poly r = fq::powmod(image, exp, modulus, uq);

        fq::Poly zeta(fac.zeta_image.begin(), fac.zeta_image.end());
        fq::Poly power{1};
        int j = -1;
        for (int cand = 0; cand < l; ++cand) {
            if (power == r) {
                j = cand;
                break;
            }
            power = fq::rem(fq::mul(power, zeta, uq), modulus, uq);
        }
        if (j < 0) throw std::logic_error("symbol_mod_rational_prime: residue power is not a root of unity");
        total += j;
    }
    return SymbolValue::root(total, l);
}

/// Residue symbol with composite rational base: factor |D| and add the
/// prime symbols with multiplicity. The sign of D is ignored (-1 is an l-th
/// power for odd l).
inline SymbolValue symbol_rational_base(const CycInt& a, std::int64_t D, std::uint64_t seed = 0) {
    const int l = a.order();
    if (D == 0) throw std::invalid_argument("symbol_rational_base: D = 0");
    if (gcd_int(D, l) != 1) throw std::invalid_argument("symbol_rational_base: gcd(D, l) != 1");
    const BigInt na = norm(a);
    if (gcd(na, BigInt(static_cast<long>(D))) != 1)
        throw std::invalid_argument("symbol_rational_base: shared factor between D and norm(a)");
    long long total = 0;
    if (D != 1 && D != -1)
        for (const auto& [qf, e] : factorize(D)) {
            const SymbolValue s = symbol_mod_rational_prime(a, qf, seed);
            if (s.zero) throw std::logic_error("symbol_rational_base: unexpected zero factor symbol");
            total += static_cast<long long>(e) * s.exp;
        }
    return SymbolValue::root(static_cast<long>(total % l), l);
}

/// Both sides of the reciprocity identity for theta = J(1,1) and a rational D
/// coprime to l p: the left side works modulo the factors of D only, the right
/// side modulo p only (theta generates the product of P_1..P_{(l-1)/2}).
struct EisensteinReport {
    std::int64_t D = 0;
    int left = 0;
    int right = 0;
    bool equal = false;
};

inline EisensteinReport check_eisenstein(const PrimeContext& ctx, std::int64_t D, std::uint64_t seed = 0) {
    const int l = static_cast<int>(ctx.l);
    if (D == 0 || gcd_int(D, l) != 1 || mod_floor(D, ctx.p) == 0)
        throw std::invalid_argument("check_eisenstein: gcd(D, lp) != 1");
    const CycInt theta = normalized_jacobi(ctx);
    EisensteinReport rep;
    rep.D = D;
    rep.left = symbol_rational_base(theta, D, seed).exp;
    const CycInt d_elem = CycInt::from_integer(l, BigInt(static_cast<long>(D)));
    long right = 0;
    for (long i = 1; i <= (l - 1) / 2; ++i) {
        const SymbolValue s = symbol_mod_degree1(ctx, d_elem, i);
        if (s.zero) throw std::logic_error("check_eisenstein: degree-one symbol vanished");
        right += s.exp;
    }
    rep.right = static_cast<int>(mod_floor(right, l));
    rep.equal = rep.left == rep.right;
    return rep;
}

}  // namespace cyclores
