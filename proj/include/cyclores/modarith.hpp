#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclores {

// Overflow-safe 64-bit modular arithmetic (products go through 128 bits).

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// remainder in [0, m)
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = m, nr = mod_floor(a, m);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
    return mod_floor(t, m);
}

// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_prime(std::int64_t n) { return n >= 2 && is_prime(static_cast<std::uint64_t>(n)); }

// order of a in (Z/mZ)*; gcd(a, m) must be 1
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (gcd_int(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
    std::int64_t ord = 1;
    std::uint64_t v = static_cast<std::uint64_t>(mod_floor(a, m));
    std::uint64_t cur = v % static_cast<std::uint64_t>(m);
    while (cur != 1) {
        cur = mul_mod(cur, v, static_cast<std::uint64_t>(m));
        ++ord;
    }
    return ord;
}

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
    // Brent's cycle variant, fixed deterministic restarts
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            const std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = static_cast<std::uint64_t>(gcd_int(static_cast<std::int64_t>(diff), static_cast<std::int64_t>(n)));
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace detail

// prime factorization of |n| as (prime, exponent) pairs, ascending primes
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factorize: zero");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t q = 2; q * q <= n && q < 100000; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        out.emplace_back(q, e);
    }
    // the cofactor is either prime or a product of primes > 10^5: split with rho
    std::vector<std::uint64_t> rest;
    if (n > 1) rest.push_back(static_cast<std::uint64_t>(n));
    while (!rest.empty()) {
        const std::uint64_t m = rest.back();
        rest.pop_back();
        if (is_prime(m)) {
            const auto q = static_cast<std::int64_t>(m);
            bool merged = false;
            for (auto& [pq, pe] : out)
                if (pq == q) {
                    ++pe;
                    merged = true;
                }
            if (!merged) out.emplace_back(q, 1);
            continue;
        }
        const std::uint64_t d = detail::pollard_rho(m);
        rest.push_back(d);
        rest.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclores
