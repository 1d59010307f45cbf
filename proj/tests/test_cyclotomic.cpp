#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "cyclores/cyclotomic.hpp"

#include <random>

using namespace cyclores;
using testsupport::random_coprime_to_lambda;
using testsupport::random_cycint;

namespace {

CycInt cyc(int l, std::vector<long> coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return CycInt::from_coeffs(l, std::move(c));
}

}  // namespace

TEST_CASE("rational embedding and canonical form") {
    const CycInt one = CycInt::from_integer(3, 1);
    CHECK(one == cyc(3, {-1, -1}));
    CHECK(CycInt::from_integer(5, -4) == cyc(5, {4, 4, 4, 4}));
    CHECK(CycInt::from_integer(3, 0).is_zero());
    CHECK(CycInt::from_integer(7, 12).rational_value() == 12);
    CHECK_FALSE(cyc(3, {1, 0}).is_rational());
}

TEST_CASE("ring arithmetic on order 3") {
    // zeta * zeta^2 = 1
    CHECK(CycInt::zeta_power(3, 1) * CycInt::zeta_power(3, 2) == cyc(3, {-1, -1}));
    // (2 + 3 zeta^2)(2 + 3 zeta) = 7
    const CycInt a = CycInt::from_integer(3, 2) + cyc(3, {0, 3});
    const CycInt b = CycInt::from_integer(3, 2) + cyc(3, {3, 0});
    CHECK(a * b == CycInt::from_integer(3, 7));
    CHECK((a + (-a)).is_zero());
    CHECK_THROWS_AS(CycInt::from_integer(3, 1) * CycInt::from_integer(5, 1), std::invalid_argument);
}

TEST_CASE("galois action") {
    std::mt19937_64 rng(20260808);
    const CycInt y = CycInt::from_integer(3, 2) + cyc(3, {3, 0});  // 2 + 3 zeta
    CHECK(galois(y, 1) == y);
    CHECK(galois(y, 2) == CycInt::from_integer(3, 2) + cyc(3, {0, 3}));
    CHECK_THROWS_AS(galois(y, 3), std::invalid_argument);
    for (int l : {5, 7, 11}) {
        for (int trial = 0; trial < 50; ++trial) {
            const CycInt r = random_cycint(rng, l, 20);
            const long i = 1 + static_cast<long>(rng() % static_cast<unsigned>(l - 1));
            const long j = 1 + static_cast<long>(rng() % static_cast<unsigned>(l - 1));
            CHECK(galois(galois(r, i), j) == galois(r, (i * j) % l));
            const CycInt s = random_cycint(rng, l, 20);
            CHECK(galois(r * s, i) == galois(r, i) * galois(s, i));
            CHECK(galois(r + s, i) == galois(r, i) + galois(s, i));
        }
    }
}

TEST_CASE("norms") {
    for (int l : {3, 5, 7, 11, 13}) CHECK(norm(one_minus_zeta(l)) == l);
    CHECK(norm(CycInt::from_integer(5, 3)) == 81);
    CHECK(norm(CycInt::from_integer(7, -2)) == 64);
    const CycInt y = CycInt::from_integer(3, 2) + cyc(3, {3, 0});
    CHECK(norm(y) == 7);
    CHECK(norm(CycInt(5)) == 0);
}

TEST_CASE("norm is multiplicative on random pairs") {
    std::mt19937_64 rng(7);
    for (int l : {3, 5, 7}) {
        for (int trial = 0; trial < 200; ++trial) {
            const CycInt a = random_cycint(rng, l, 15);
            const CycInt b = random_cycint(rng, l, 15);
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
    }
}

TEST_CASE("one_jet on pinned values") {
    for (int l : {3, 5, 7, 11}) CHECK(one_jet(CycInt::from_integer(l, -1)) == Jet{l - 1, 0});
    CHECK(one_jet(one_minus_zeta(5)) == Jet{0, 4});
    CHECK(one_jet(cyc(3, {-2, 1})) == Jet{2, 0});
}

TEST_CASE("jet soundness: x - (b - c(1-zeta)) is divisible by (1-zeta)^2") {
    std::mt19937_64 rng(11);
    for (int l : {3, 5, 7, 11}) {
        for (int trial = 0; trial < 100; ++trial) {
            const CycInt x = random_cycint(rng, l, 50);
            const Jet j = one_jet(x);
            const CycInt approx =
                CycInt::from_integer(l, j.b) - CycInt::from_integer(l, j.c) * one_minus_zeta(l);
            const CycInt diff = x - approx;
            const auto val = lambda_valuation(diff);
            CHECK((!val.has_value() || *val >= 2));
        }
    }
}

TEST_CASE("lambda valuation") {
    CHECK(lambda_valuation(one_minus_zeta(3)) == 1);
    CHECK(lambda_valuation(one_minus_zeta(11)) == 1);
    for (int l : {3, 5, 7}) CHECK(lambda_valuation(CycInt::from_integer(l, l)) == l - 1);
    CHECK(lambda_valuation(CycInt::from_integer(3, 5)) == 0);
    CHECK_FALSE(lambda_valuation(CycInt(7)).has_value());
}

TEST_CASE("divide_exact round trips and rejects non-divisors") {
    std::mt19937_64 rng(13);
    const CycInt seven = CycInt::from_integer(3, 7);
    const CycInt y = CycInt::from_integer(3, 2) + cyc(3, {3, 0});
    CHECK(divide_exact(seven, y) == CycInt::from_integer(3, 2) + cyc(3, {0, 3}));
    CHECK_THROWS_AS(divide_exact(CycInt::from_integer(3, 1), one_minus_zeta(3)), not_divisible_error);
    CHECK_THROWS_AS(divide_exact(y, CycInt(3)), std::invalid_argument);
    for (int l : {3, 5, 7, 11}) {
        for (int trial = 0; trial < 60; ++trial) {
            const CycInt a = random_cycint(rng, l, 30);
            CycInt b = random_cycint(rng, l, 30);
            if (b.is_zero()) b = CycInt::from_integer(l, 1);
            CHECK(divide_exact(a * b, b) == a);
        }
    }
}

TEST_CASE("cyclotomic units") {
    // u_a == a mod (1-zeta)^2, i.e. jet b component equals a
    for (int l : {3, 5, 7, 11, 13, 17, 19}) {
        for (long a = 2; a < l; ++a) {
            const CycInt u = cyclotomic_unit(l, a);
            CHECK(one_jet(u).b == a % l);
            const BigInt n = norm(u);
            CHECK((n == 1 || n == -1));
        }
    }
    CHECK(cyclotomic_unit(5, 2) == CycInt::zeta_power(5, 2) * (CycInt::from_integer(5, 1) + CycInt::zeta_power(5, 1)));
    CHECK_THROWS_AS(cyclotomic_unit(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_unit(5, 5), std::invalid_argument);
}

TEST_CASE("normalize_associate pinned cases") {
    // already normalized inputs pass through with an empty trail
    const auto [beta_minus1, trail_minus1] = normalize_associate(CycInt::from_integer(3, -1));
    CHECK(beta_minus1 == CycInt::from_integer(3, -1));
    CHECK(trail_minus1.empty());

    const CycInt j37 = cyc(3, {-2, 1});
    const auto [beta_j, trail_j] = normalize_associate(j37);
    CHECK(beta_j == j37);
    CHECK(trail_j.empty());

    const auto [beta_zeta, trail_zeta] = normalize_associate(CycInt::zeta_power(3, 1));
    CHECK(one_jet(beta_zeta) == Jet{2, 0});
    CHECK(norm(beta_zeta) == 1);  // a unit
    CHECK(trail_zeta.replay(CycInt::zeta_power(3, 1)) == beta_zeta);

    CHECK_THROWS_AS(normalize_associate(one_minus_zeta(5)), std::invalid_argument);
}

TEST_CASE("normalize_associate contract on random inputs") {
    std::mt19937_64 rng(17);
    for (int l : {3, 5, 7, 11}) {
        for (int trial = 0; trial < 150; ++trial) {
            const CycInt x = random_coprime_to_lambda(rng, l, 25);
            const auto [beta, trail] = normalize_associate(x);
            CHECK(one_jet(beta) == Jet{l - 1, 0});
            CHECK(trail.replay(x) == beta);
            // unit multiple: each divides the other exactly
            CHECK(divide_exact(beta, x) * x == beta);
            CHECK(divide_exact(x, beta) * beta == x);
        }
    }
}

TEST_CASE("normalize_associate is stable under +-zeta^k multiples") {
    std::mt19937_64 rng(19);
    for (int l : {3, 5, 7, 11}) {
        for (int trial = 0; trial < 200; ++trial) {
            const CycInt x = random_coprime_to_lambda(rng, l, 25);
            const CycInt base = normalize_associate(x).first;
            const long k = static_cast<long>(rng() % static_cast<unsigned>(l));
            CycInt y = x * CycInt::zeta_power(l, k);
            if (rng() & 1) y = -y;
            CHECK(normalize_associate(y).first == base);
        }
    }
}

TEST_CASE("euclid_gcd basics") {
    const CycInt seven = CycInt::from_integer(3, 7);
    const CycInt zero(3);
    const CycInt x = cyc(3, {2, 5});
    CHECK(euclid_gcd(x, zero) == x);
    CHECK(euclid_gcd(zero, x) == x);
    CHECK_THROWS_AS(euclid_gcd(zero, CycInt(3)), std::invalid_argument);
    CHECK_THROWS_AS(euclid_gcd(CycInt::from_integer(13, 1), CycInt(13)), std::domain_error);

    // gcd(7, zeta - 2) generates the degree-one prime above 7; the normalized
    // associate is the Jacobi sum -2 zeta + zeta^2
    const CycInt g = euclid_gcd(seven, CycInt::zeta_power(3, 1) - CycInt::from_integer(3, 2));
    const CycInt j37 = cyc(3, {-2, 1});
    CHECK(divide_exact(g, j37) * j37 == g);
    CHECK(divide_exact(j37, g) * g == j37);
}

TEST_CASE("euclid_gcd divides both inputs and absorbs common factors") {
    std::mt19937_64 rng(23);
    for (int l : {3, 5, 7, 11}) {
        for (int trial = 0; trial < 40; ++trial) {
            CycInt a = random_cycint(rng, l, 8);
            CycInt b = random_cycint(rng, l, 8);
            const CycInt c = random_cycint(rng, l, 8);
            if (a.is_zero() && b.is_zero()) continue;
            const CycInt g = euclid_gcd(a * c, b * c);
            if ((a * c).is_zero() && (b * c).is_zero()) continue;
            CHECK_NOTHROW(divide_exact(a * c, g));
            CHECK_NOTHROW(divide_exact(b * c, g));
            if (!c.is_zero()) CHECK_NOTHROW(divide_exact(g, c));  // every common divisor divides g
        }
    }
}

TEST_CASE("prime_generator") {
    const PrimeContext c37 = build_context(3, 7);
    CHECK(prime_generator(c37) == cyc(3, {-2, 1}));

    for (const auto& [l, p] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 13}, {5, 11}, {5, 31}, {7, 29}, {11, 23}, {11, 67}}) {
        const PrimeContext ctx = build_context(l, p);
        const CycInt k = prime_generator(ctx);
        CHECK(norm(k) == p);
        CHECK(one_jet(k) == Jet{static_cast<int>(l - 1), 0});
    }

    CHECK_THROWS_AS(prime_generator(build_context(13, 53)), std::domain_error);
}

TEST_CASE("normalization agrees across unit multiples of Jacobi-like elements") {
    // elements with J sigma_{l-1}(J) = p: normalized forms of +-zeta^k J coincide
    for (const auto& [l, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 7}, {5, 11}, {7, 29}}) {
        const PrimeContext ctx = build_context(l, p);
        const CycInt j = jacobi_sum(ctx, 1, 1);
        const int li = static_cast<int>(l);
        const CycInt b1 = normalize_associate(j * CycInt::zeta_power(li, 1)).first;
        const CycInt b2 = normalize_associate(-(j * CycInt::zeta_power(li, li - 1))).first;
        CHECK(b1 == b2);
        CHECK(b1 == j);
        CHECK(b1 * galois(b1, l - 1) == CycInt::from_integer(li, BigInt(static_cast<long>(p))));
    }
}
