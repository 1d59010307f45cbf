// Acceptance suite: one line per criterion, exit 0 iff every criterion holds.
// All tolerances are exact identities or zero-mismatch counts; the runtime of
// the differential grid is measured against its stated budget.

#include "cyclores/differential.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace cyclores;

namespace {

std::map<int, std::pair<bool, std::string>> g_results;

void record(int number, bool ok, const std::string& text) { g_results[number] = {ok, text}; }

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf);
}

std::vector<std::int64_t> primes_equiv_1(std::int64_t l, std::int64_t p_max) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = l + 1; p < p_max; p += l)
        if (is_prime(p)) out.push_back(p);
    return out;
}

CycInt random_cycint(std::mt19937_64& rng, int l, long bound) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(l - 1));
    for (auto& c : coeffs) c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    return CycInt::from_coeffs(l, std::move(coeffs));
}

constexpr std::int64_t kOrders[] = {3, 5, 7, 11};

// criteria 1, 2 and 6 share the grid l in {3,5,7,11}, p < 3000
void run_grid_criteria() {
    const auto start = std::chrono::steady_clock::now();
    long long classify_cases = 0, classify_bad = 0;
    long long jet_cases = 0, jet_bad = 0;
    long long crit_cases = 0, crit_bad = 0;
    for (const std::int64_t l : kOrders) {
        for (const std::int64_t p : primes_equiv_1(l, 3000)) {
            const PrimeContext ctx = build_context(l, p);

            const CycInt j = jacobi_sum(ctx, 1, 1);
            ++jet_cases;
            if (!(one_jet(j) == Jet{static_cast<int>(l - 1), 0}) ||
                j * galois(j, l - 1) != CycInt::from_integer(static_cast<int>(l), BigInt(static_cast<long>(p))))
                ++jet_bad;

            for (std::int64_t d = 2; d <= 50; ++d) {
                if (gcd_int(d, l) != 1 || mod_floor(d, p) == 0) continue;
                ++classify_cases;
                const Classification c = classify_with(ctx, j, d);
                if (!c.ind_class_available || c.ind_class != ind_class_oracle(ctx, d)) ++classify_bad;
            }

            ++crit_cases;
            if (!criterion_for_l(ctx).consistent || !criterion_for_2(ctx).consistent) ++crit_bad;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    record(1, classify_bad == 0 && secs < 60.0,
           fmt("differential classification vs mod-p oracle (l in {3,5,7,11}, p < 3000, D in 2..50): "
               "%lld comparisons, %lld mismatches, %.1fs (budget 60s)",
               classify_cases, classify_bad, secs));
    record(2, jet_bad == 0,
           fmt("J(1,1) jet is (l-1,0) and J*conj(J) = p on the grid: %lld contexts, %lld failures", jet_cases,
               jet_bad));
    record(6, crit_bad == 0,
           fmt("coefficient criteria for D = l and D = 2 vs oracle: %lld contexts, %lld inconsistencies", crit_cases,
               crit_bad));
}

void run_generator_product() {
    long long cases = 0, bad = 0;
    bool pinned_ok = false;
    for (const std::int64_t l : kOrders) {
        for (const std::int64_t p : primes_equiv_1(l, 1000)) {
            const auto rep = verify_generator_product(build_context(l, p));
            ++cases;
            if (!rep.equal) ++bad;
            if (l == 3 && p == 7)
                pinned_ok = rep.equal && rep.generator == CycInt::from_coeffs(3, {BigInt(-2), BigInt(1)});
        }
    }
    record(3, bad == 0 && pinned_ok,
           fmt("normalized generator product equals J(1,1) (l in {3,5,7,11}, p < 1000): %lld contexts, "
               "%lld failures, pinned (3,7) instance %s",
               cases, bad, pinned_ok ? "ok" : "bad"));
}

void run_reciprocity_sample() {
    constexpr std::int64_t kPrimeD[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    long long cases = 0, bad = 0;
    for (const std::int64_t l : kOrders) {
        for (const std::int64_t p : primes_equiv_1(l, 300)) {
            const PrimeContext ctx = build_context(l, p);
            for (const std::int64_t d : kPrimeD) {
                if (gcd_int(d, l * p) != 1) continue;
                ++cases;
                if (!check_eisenstein(ctx, d).equal) ++bad;
            }
        }
    }
    record(4, cases >= 500 && bad == 0,
           fmt("reciprocity: mod-D side equals mod-p side on prime D: %lld triples (>= 500), %lld failures", cases,
               bad));
}

// exhaustive search used as the partition oracle
bool partition_bruteforce(std::int64_t p, std::int64_t& out_l, std::int64_t& out_m) {
    for (std::int64_t m = 1; 27 * m * m <= 4 * p; ++m) {
        const std::int64_t rest = 4 * p - 27 * m * m;
        const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
        for (std::int64_t cand = root - 2; cand <= root + 2; ++cand) {
            if (cand < 0 || cand * cand != rest) continue;
            for (const std::int64_t sgn : {cand, -cand}) {
                if (mod_floor(sgn, 3) == 1) {
                    out_l = sgn;
                    out_m = m;
                    return true;
                }
            }
        }
    }
    return false;
}

void run_cubic_partition() {
    long long cases = 0, bad = 0, branch_cases = 0, branch_bad = 0;
    for (const std::int64_t p : primes_equiv_1(3, 10000)) {
        const PrimeContext ctx = build_context(3, p);
        ++cases;
        CubicPartition part;
        try {
            part = cubic_partition(ctx);
        } catch (const std::exception&) {
            ++bad;
            continue;
        }
        std::int64_t bl = 0, bm = 0;
        if (!partition_bruteforce(p, bl, bm) || part.L != bl || std::abs(part.M) != bm) ++bad;
        for (const std::int64_t d : {2, 3, 5}) {
            if (mod_floor(d, p) == 0) continue;
            ++branch_cases;
            const auto rep = euler_cubic_table(ctx, d);
            const std::int64_t expected = rep.branch == 0 ? 1 : (rep.branch == 1 ? rep.branch_plus : rep.branch_minus);
            if (rep.power != expected) ++branch_bad;
        }
    }
    record(5, bad == 0 && branch_bad == 0,
           fmt("cubic partition vs exhaustive search (p < 10^4): %lld primes, %lld failures; Euler branch table "
               "(D in {2,3,5}): %lld cases, %lld failures",
               cases, bad, branch_cases, branch_bad));
}

void run_conjecture_scan() {
    const auto below_1000 = conjecture_scan(999);
    const auto with_1093 = conjecture_scan(1100);
    // recorded value from the independent pre-build re-summation: S(1093) = 0
    const bool ok =
        below_1000.empty() && with_1093.size() == 1 && with_1093[0] == 1093 && sum_inverse_halves(1093) == 0;
    record(7, ok,
           fmt("inverse-half sums: S != 0 for every prime l < 1000; scan to 1100 reproduces the recorded "
               "l=1093, S=0 (%s)",
               ok ? "reproduced" : "differs"));
}

void run_property_suites() {
    constexpr int kCases = 10000;
    std::string detail;
    bool all = true;

    {  // normalization stability under +-zeta^k multiples
        std::mt19937_64 rng(1001);
        long long bad = 0;
        for (int i = 0; i < kCases; ++i) {
            const int l = static_cast<int>(kOrders[static_cast<std::size_t>(i % 4)]);
            CycInt x = random_cycint(rng, l, 25);
            while (x.is_zero() || one_jet(x).b == 0) x = random_cycint(rng, l, 25);
            const CycInt base = normalize_associate(x).first;
            CycInt y = x * CycInt::zeta_power(l, static_cast<long>(rng() % static_cast<unsigned>(l)));
            if (rng() & 1) y = -y;
            if (normalize_associate(y).first != base) ++bad;
        }
        all = all && bad == 0;
        detail += fmt("normalization stability %lld/%d bad; ", bad, kCases);
    }

    {  // symbol multiplicativity in the argument and in the base
        std::mt19937_64 rng(1002);
        constexpr std::int64_t kQ[] = {2, 3, 5, 7, 13, 29};
        long long bad = 0;
        for (int i = 0; i < kCases; ++i) {
            const int l = static_cast<int>(kOrders[static_cast<std::size_t>(i % 3)]);  // 3, 5, 7
            std::int64_t q = kQ[rng() % 6];
            while (q == l) q = kQ[rng() % 6];
            const CycInt a = random_cycint(rng, l, 20);
            const CycInt b = random_cycint(rng, l, 20);
            const SymbolValue sa = symbol_mod_rational_prime(a, q);
            const SymbolValue sb = symbol_mod_rational_prime(b, q);
            const SymbolValue sab = symbol_mod_rational_prime(a * b, q);
            if (sa.zero || sb.zero) {
                if (!sab.zero) ++bad;
            } else if (!(sab == SymbolValue::root(sa.exp + sb.exp, l))) {
                ++bad;
            }
        }
        all = all && bad == 0;
        detail += fmt("symbol multiplicativity %lld/%d bad; ", bad, kCases);
    }

    {  // Galois equivariance of the degree-one symbol
        std::mt19937_64 rng(1003);
        std::vector<PrimeContext> pool;
        for (const std::int64_t l : kOrders) pool.push_back(build_context(l, primes_equiv_1(l, 500).back()));
        long long bad = 0;
        for (int i = 0; i < kCases; ++i) {
            const PrimeContext& ctx = pool[static_cast<std::size_t>(i % 4)];
            const auto l = static_cast<int>(ctx.l);
            const CycInt a = random_cycint(rng, l, 30);
            const long k = 1 + static_cast<long>(rng() % static_cast<unsigned>(l - 1));
            const long m = 1 + static_cast<long>(rng() % static_cast<unsigned>(l - 1));
            const SymbolValue s = symbol_mod_degree1(ctx, a, k);
            const SymbolValue s_image = symbol_mod_degree1(ctx, galois(a, m), (k * inv_mod(m, l)) % l);
            if (s.zero ? !s_image.zero : !(s_image == SymbolValue::root(s.exp * m, l))) ++bad;
        }
        all = all && bad == 0;
        detail += fmt("galois equivariance %lld/%d bad; ", bad, kCases);
    }

    {  // norm multiplicativity
        std::mt19937_64 rng(1004);
        long long bad = 0;
        for (int i = 0; i < kCases; ++i) {
            const int l = static_cast<int>(kOrders[static_cast<std::size_t>(i % 4)]);
            const CycInt a = random_cycint(rng, l, 15);
            const CycInt b = random_cycint(rng, l, 15);
            if (norm(a * b) != norm(a) * norm(b)) ++bad;
        }
        all = all && bad == 0;
        detail += fmt("norm multiplicativity %lld/%d bad", bad, kCases);
    }

    record(8, all, "randomized property suites (10^4 cases each, fixed seeds): " + detail);
}

}  // namespace

int main() {
    run_grid_criteria();
    run_generator_product();
    run_reciprocity_sample();
    run_cubic_partition();
    run_conjecture_scan();
    run_property_suites();

    bool all_ok = true;
    for (const auto& [number, result] : g_results) {
        std::printf("[%d] %s %s\n", number, result.first ? "PASS" : "FAIL", result.second.c_str());
        all_ok = all_ok && result.first;
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
