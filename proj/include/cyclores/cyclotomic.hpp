#pragma once

#include "cyclores/modp.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclores {

using BigInt = mpz_class;

/// Thrown by divide_exact when the divisor does not divide the dividend.
/// euclid_gcd and lambda_valuation rely on catching this condition, so it is
/// a distinct type rather than a plain runtime_error.
class not_divisible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact element of Z[zeta_l], l an odd prime, in the integral basis
/// {zeta, zeta^2, ..., zeta^{l-1}}.
///
/// A rational integer n is stored with every coefficient equal to -n, via
/// 1 = -(zeta + ... + zeta^{l-1}). The basis makes representations unique,
/// so equality is plain coefficient equality. Coefficients are unbounded.
class CycInt {
public:
    explicit CycInt(int l) : l_(checked_order(l)), a_(static_cast<std::size_t>(l - 1)) {}

    static CycInt from_coeffs(int l, std::vector<BigInt> coeffs) {
        CycInt x(l);
        if (coeffs.size() != static_cast<std::size_t>(l - 1))
            throw std::invalid_argument("CycInt: expected l-1 coefficients");
        x.a_ = std::move(coeffs);
        return x;
    }

    static CycInt from_integer(int l, const BigInt& n) {
        CycInt x(l);
        for (auto& c : x.a_) c = -n;
        return x;
    }

    static CycInt from_integer(int l, long n) { return from_integer(l, BigInt(n)); }

    // zeta^k for any integer k; k == 0 (mod l) gives the rational 1
    static CycInt zeta_power(int l, long k) {
        const long e = mod_floor(k, l);
        if (e == 0) return from_integer(l, 1);
        CycInt x(l);
        x.a_[static_cast<std::size_t>(e - 1)] = 1;
        return x;
    }

    int order() const { return l_; }
    const std::vector<BigInt>& coeffs() const { return a_; }

    // coefficient of zeta^h, 1 <= h <= l-1
    const BigInt& coeff(int h) const {
        if (h < 1 || h >= l_) throw std::invalid_argument("CycInt: coefficient index out of range");
        return a_[static_cast<std::size_t>(h - 1)];
    }

    bool is_zero() const {
        for (const auto& c : a_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (const auto& c : a_)
            if (c != a_[0]) return false;
        return true;
    }

    // n with *this == n; requires is_rational()
    BigInt rational_value() const {
        if (!is_rational()) throw std::logic_error("CycInt: value is not a rational integer");
        return -a_[0];
    }

    bool operator==(const CycInt& o) const = default;

    CycInt operator-() const {
        CycInt r(l_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    CycInt& operator+=(const CycInt& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend CycInt operator+(CycInt x, const CycInt& y) { return x += y; }
    friend CycInt operator-(CycInt x, const CycInt& y) { return x -= y; }

    friend CycInt operator*(const CycInt& x, const CycInt& y) {
        x.require_same_order(y);
        const int l = x.l_;
        // convolution over zeta-exponents mod l, then eliminate the constant
        // term via 1 = -(zeta + ... + zeta^{l-1})
        std::vector<BigInt> acc(static_cast<std::size_t>(l));
        BigInt prod;
        for (int g = 1; g < l; ++g) {
            const BigInt& xg = x.a_[static_cast<std::size_t>(g - 1)];
            if (xg == 0) continue;
            for (int h = 1; h < l; ++h) {
                const BigInt& yh = y.a_[static_cast<std::size_t>(h - 1)];
                if (yh == 0) continue;
                prod = xg * yh;
                acc[static_cast<std::size_t>((g + h) % l)] += prod;
            }
        }
        CycInt r(l);
        for (int h = 1; h < l; ++h) r.a_[static_cast<std::size_t>(h - 1)] = acc[static_cast<std::size_t>(h)] - acc[0];
        return r;
    }

private:
    static int checked_order(int l) {
        if (l < 3 || l % 2 == 0 || !is_prime(static_cast<std::int64_t>(l)))
            throw std::invalid_argument("CycInt: order must be an odd prime");
        return l;
    }

    void require_same_order(const CycInt& o) const {
        if (l_ != o.l_) throw std::invalid_argument("CycInt: mismatched cyclotomic orders");
    }

    int l_;
    std::vector<BigInt> a_;  // a_[h-1] multiplies zeta^h
};

inline CycInt one_minus_zeta(int l) { return CycInt::from_integer(l, 1) - CycInt::zeta_power(l, 1); }

/// Galois action sigma_i: zeta -> zeta^i. A ring automorphism for every
/// i coprime to l; i == 0 (mod l) is rejected.
inline CycInt galois(const CycInt& x, long i) {
    const int l = x.order();
    const long im = mod_floor(i, l);
    if (im == 0) throw std::invalid_argument("galois: exponent divisible by l");
    std::vector<BigInt> out(static_cast<std::size_t>(l - 1));
    for (int h = 1; h < l; ++h) out[static_cast<std::size_t>((h * im) % l - 1)] = x.coeff(h);
    return CycInt::from_coeffs(l, std::move(out));
}

// product of the conjugates sigma_i(x) for i = 2..l-1 (norm(x) = x * this)
inline CycInt conjugate_cofactor(const CycInt& x) {
    const int l = x.order();
    CycInt acc = CycInt::from_integer(l, 1);
    for (int i = 2; i < l; ++i) acc = acc * galois(x, i);
    return acc;
}

/// Field norm: the product of all conjugates, always a rational integer
/// (non-negative, since the field is totally complex).
inline BigInt norm(const CycInt& x) {
    const CycInt full = x * conjugate_cofactor(x);
    if (!full.is_rational()) throw std::logic_error("norm: conjugate product is not rational");
    return full.rational_value();
}

/// First-order data of x at the ramified prime: x == b - c(1-zeta) modulo
/// (1-zeta)^2, with b = sum a_h and c = sum h*a_h, both mod l. The pair
/// classifies residues mod (1-zeta)^2 completely.
struct Jet {
    int b = 0;
    int c = 0;
    bool operator==(const Jet&) const = default;
};

inline Jet one_jet(const CycInt& x) {
    const int l = x.order();
    BigInt b = 0, c = 0;
    for (int h = 1; h < l; ++h) {
        b += x.coeff(h);
        c += h * x.coeff(h);
    }
    Jet j;
    j.b = static_cast<int>(mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(l)));
    j.c = static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(l)));
    return j;
}

/// Exact quotient x / y, computed as x * prod_{i>1} sigma_i(y) / norm(y) with
/// every coefficient division required to be exact. Throws not_divisible_error
/// otherwise; that error is load-bearing for gcd and valuation loops.
inline CycInt divide_exact(const CycInt& x, const CycInt& y) {
    if (x.order() != y.order()) throw std::invalid_argument("divide_exact: mismatched cyclotomic orders");
    if (y.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    const int l = x.order();
    const CycInt cof = conjugate_cofactor(y);
    const CycInt den = y * cof;
    if (!den.is_rational()) throw std::logic_error("divide_exact: norm is not rational");
    const BigInt n = den.rational_value();
    const CycInt num = x * cof;
    std::vector<BigInt> q(static_cast<std::size_t>(l - 1));
    BigInt rem;
    for (int h = 1; h < l; ++h) {
        mpz_tdiv_qr(q[static_cast<std::size_t>(h - 1)].get_mpz_t(), rem.get_mpz_t(), num.coeff(h).get_mpz_t(),
                    n.get_mpz_t());
        if (rem != 0) throw not_divisible_error("divide_exact: not divisible");
    }
    return CycInt::from_coeffs(l, std::move(q));
}

/// Largest k with (1-zeta)^k | x; nullopt (infinite) for x == 0.
inline std::optional<long> lambda_valuation(CycInt x) {
    if (x.is_zero()) return std::nullopt;
    const CycInt lam = one_minus_zeta(x.order());
    long k = 0;
    while (one_jet(x).b == 0) {
        x = divide_exact(x, lam);
        ++k;
    }
    return k;
}

/// The cyclotomic unit u_a = zeta^{(1-a)/2} (1 - zeta^a)/(1 - zeta), with the
/// half-integer exponent resolved mod l. Satisfies u_a == a (mod (1-zeta)^2).
inline CycInt cyclotomic_unit(int l, long a) {
    const long am = mod_floor(a, l);
    if (am <= 1) throw std::invalid_argument("cyclotomic_unit: a must not be 0 or 1 (mod l)");
    const long e = mod_floor((1 - am) * ((l + 1) / 2), l);
    CycInt s(l);  // (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^{a-1}
    for (long j = 0; j < am; ++j) s += CycInt::zeta_power(l, j);
    return CycInt::zeta_power(l, e) * s;
}

/// Record of the unit multiplications normalize_associate applied. Replaying
/// the trail on the original element reproduces the normalized output exactly.
struct UnitTrail {
    bool negated = false;
    int zeta_exp = 0;
    std::vector<std::pair<int, int>> unit_powers;  // (a, d): multiplied by u_a^d

    bool empty() const { return !negated && zeta_exp == 0 && unit_powers.empty(); }

    CycInt replay(CycInt x) const {
        if (negated) x = -x;
        if (zeta_exp != 0) x = x * CycInt::zeta_power(x.order(), zeta_exp);
        for (const auto& [a, d] : unit_powers) {
            const CycInt u = cyclotomic_unit(x.order(), a);
            for (int i = 0; i < d; ++i) x = x * u;
        }
        return x;
    }
};

/// Associate normalization: returns the unit multiple beta of x with
/// one_jet(beta) == (l-1, 0), i.e. beta == -1 (mod (1-zeta)^2).
///
/// The sign is fixed first: x is negated when the jet's b component lies in
/// {1, ..., (l-1)/2}, so the chosen representative always has b in the upper
/// half. With that convention the output depends only on the orbit of x under
/// multiplication by +-zeta^k (already-normalized inputs, jet (l-1, 0), pass
/// through unchanged). Then the unit walk: with a the least primitive root
/// mod l and d the unique exponent in [0, l-2] with a^d b == -1 (mod l),
/// beta = zeta^{c a^d} u_a^d x.
inline std::pair<CycInt, UnitTrail> normalize_associate(const CycInt& x) {
    const int l = x.order();
    Jet j = one_jet(x);
    if (j.b == 0) throw std::invalid_argument("normalize_associate: (1-zeta) divides the input");

    UnitTrail trail;
    CycInt base = x;
    if (j.b <= (l - 1) / 2) {
        trail.negated = true;
        base = -base;
        j.b = l - j.b;
        j.c = j.c == 0 ? 0 : l - j.c;
    }

    const long a = least_primitive_root(l);
    int d = 0;
    long t = j.b;
    while (t != l - 1) {
        t = (t * a) % l;
        ++d;
    }
    const long ad = static_cast<long>(pow_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(d),
                                              static_cast<std::uint64_t>(l)));
    trail.zeta_exp = static_cast<int>((j.c * ad) % l);
    if (d > 0) trail.unit_powers.emplace_back(static_cast<int>(a), d);

    CycInt beta = trail.zeta_exp != 0 ? base * CycInt::zeta_power(l, trail.zeta_exp) : base;
    if (d > 0) {
        const CycInt u = cyclotomic_unit(l, a);
        for (int i = 0; i < d; ++i) beta = beta * u;
    }
    if (!(one_jet(beta) == Jet{l - 1, 0})) throw std::logic_error("normalize_associate: postcondition failed");
    return {beta, trail};
}

inline bool norm_euclidean_order(int l) { return l == 3 || l == 5 || l == 7 || l == 11; }

namespace detail {

// nearest integer to num/den (den > 0), ties toward zero
inline BigInt round_nearest(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && q < 0)) q += 1;
    return q;
}

// quotient by coordinate rounding, remainder x - q*y
inline std::pair<CycInt, CycInt> euclid_divmod(const CycInt& x, const CycInt& y) {
    const int l = x.order();
    const CycInt cof = conjugate_cofactor(y);
    const BigInt n = (y * cof).rational_value();
    const CycInt num = x * cof;
    std::vector<BigInt> qc(static_cast<std::size_t>(l - 1));
    for (int h = 1; h < l; ++h) qc[static_cast<std::size_t>(h - 1)] = round_nearest(num.coeff(h), n);
    CycInt q = CycInt::from_coeffs(l, std::move(qc));
    return {q, x - q * y};
}

// search a quotient offset in {-1,0,1}^{l-1} that makes the remainder norm
// drop below bound; used only when plain rounding stalls
inline bool shrink_remainder(const CycInt& y, const BigInt& bound, CycInt& r) {
    const int l = y.order();
    std::vector<CycInt> zy;
    zy.reserve(static_cast<std::size_t>(l - 1));
    for (int h = 1; h < l; ++h) zy.push_back(CycInt::zeta_power(l, h) * y);
    std::vector<int> delta(static_cast<std::size_t>(l - 1), -1);
    while (true) {
        CycInt cand = r;
        for (int h = 1; h < l; ++h) {
            const int d = delta[static_cast<std::size_t>(h - 1)];
            if (d == 1)
                cand -= zy[static_cast<std::size_t>(h - 1)];
            else if (d == -1)
                cand += zy[static_cast<std::size_t>(h - 1)];
        }
        if (norm(cand) < bound) {
            r = cand;
            return true;
        }
        std::size_t i = 0;
        for (; i < delta.size(); ++i) {
            if (delta[i] < 1) {
                ++delta[i];
                break;
            }
            delta[i] = -1;
        }
        if (i == delta.size()) return false;
    }
}

}  // namespace detail

/// Norm-Euclidean gcd in Z[zeta_l], supported exactly for l in {3, 5, 7, 11}.
/// Quotients round the exact field coordinates of x/y to nearest integers
/// (ties toward zero); remainder norms decrease strictly.
inline CycInt euclid_gcd(CycInt x, CycInt y) {
    if (x.order() != y.order()) throw std::invalid_argument("euclid_gcd: mismatched cyclotomic orders");
    const int l = x.order();
    if (!norm_euclidean_order(l)) throw std::domain_error("euclid_gcd: unsupported: not norm-Euclidean");
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("euclid_gcd: both arguments zero");
    while (!y.is_zero()) {
        auto [q, r] = detail::euclid_divmod(x, y);
        if (!r.is_zero()) {
            const BigInt ny = norm(y);
            if (norm(r) >= ny && !detail::shrink_remainder(y, ny, r))
                throw std::logic_error("euclid_gcd: no norm-decreasing remainder found");
        }
        x = y;
        y = r;
    }
    return x;
}

/// Generator K of the degree-one prime P_1 = (p, zeta - alpha) above p,
/// normalized so one_jet(K) = (l-1, 0); norm(K) = p. Norm-Euclidean orders
/// only; the PID-but-not-Euclidean range l >= 13 is rejected.
inline CycInt prime_generator(const PrimeContext& ctx) {
    const int l = static_cast<int>(ctx.l);
    if (!norm_euclidean_order(l))
        throw std::domain_error("prime_generator: unsupported: generator search not implemented for non-Euclidean PID");
    const CycInt p_elem = CycInt::from_integer(l, BigInt(static_cast<long>(ctx.p)));
    const CycInt zeta_minus_alpha = CycInt::zeta_power(l, 1) - CycInt::from_integer(l, BigInt(static_cast<long>(ctx.alpha)));
    const CycInt g = euclid_gcd(p_elem, zeta_minus_alpha);
    const CycInt k = normalize_associate(g).first;

    if (norm(k) != ctx.p) throw std::logic_error("prime_generator: norm(K) != p");
    // K must vanish under zeta -> alpha (K lies in P_1) ...
    std::uint64_t image = 0;
    std::uint64_t apow = 1;
    const auto up = static_cast<std::uint64_t>(ctx.p);
    for (int h = 1; h < l; ++h) {
        apow = mul_mod(apow, static_cast<std::uint64_t>(ctx.alpha), up);
        image = (image + mul_mod(mpz_fdiv_ui(k.coeff(h).get_mpz_t(), up), apow, up)) % up;
    }
    if (image != 0) throw std::logic_error("prime_generator: K does not reduce to 0 mod P_1");
    // ... and zeta - alpha must lie in <K>
    divide_exact(zeta_minus_alpha, k);
    return k;
}

}  // namespace cyclores
