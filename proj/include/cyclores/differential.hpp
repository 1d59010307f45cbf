#pragma once

#include "cyclores/criterion.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclores {

/// Differential test driver: symbol-side classification against the mod-p
/// oracle across a (l, p) grid and a D range, plus the D = l and D = 2
/// coefficient criteria. Failures are report content, not exceptions.
struct DifferentialReport {
    long long classify_cases = 0;
    long long classify_failures = 0;
    long long criterion_l_cases = 0;
    long long criterion_l_failures = 0;
    long long criterion_2_cases = 0;
    long long criterion_2_failures = 0;

    struct Failure {
        std::int64_t l = 0;
        std::int64_t p = 0;
        std::int64_t D = 0;
        int got = 0;
        int want = 0;
    };
    std::optional<Failure> first_failure;

    bool all_passed() const { return classify_failures == 0 && criterion_l_failures == 0 && criterion_2_failures == 0; }
};

inline DifferentialReport differential_run(const std::vector<std::pair<std::int64_t, std::int64_t>>& grid,
                                           std::int64_t d_lo, std::int64_t d_hi, std::uint64_t seed = 0) {
    DifferentialReport rep;
    for (const auto& [l, p] : grid) {
        const PrimeContext ctx = build_context(l, p);
        const CycInt phi = normalized_jacobi(ctx);
        for (std::int64_t d = d_lo; d <= d_hi; ++d) {
            if (d == 0 || gcd_int(d, l) != 1 || mod_floor(d, p) == 0) continue;
            const Classification c = classify_with(ctx, phi, d, seed);
            const int want = ind_class_oracle(ctx, d);
            ++rep.classify_cases;
            if (!c.ind_class_available || c.ind_class != want) {
                ++rep.classify_failures;
                if (!rep.first_failure) rep.first_failure = {l, p, d, c.ind_class, want};
            }
        }
        ++rep.criterion_l_cases;
        if (!criterion_for_l(ctx).consistent) {
            ++rep.criterion_l_failures;
            if (!rep.first_failure) rep.first_failure = {l, p, l, -1, ind_class_oracle(ctx, l)};
        }
        ++rep.criterion_2_cases;
        if (!criterion_for_2(ctx).consistent) {
            ++rep.criterion_2_failures;
            if (!rep.first_failure) rep.first_failure = {l, p, 2, -1, ind_class_oracle(ctx, 2)};
        }
    }
    return rep;
}

}  // namespace cyclores
