#pragma once

#include <optional>
#include <utility>

namespace suebk {

/// N = s*a + t*b with nonnegative s, t and coprime block sizes a, b.
struct CoinDecomposition {
    long long a = 0;
    long long b = 0;
    long long n = 0;
    long long s = 0;
    long long t = 0;
};

/// How decompose picks among the solutions.
struct DecomposePolicy {
    /// When set, use exactly this (s, t) after validating it; otherwise take
    /// the solution with the smallest t.
    std::optional<std::pair<long long, long long>> explicit_st;

    static DecomposePolicy minimal_t() { return {}; }
    static DecomposePolicy exact(long long s, long long t) {
        return {std::make_pair(s, t)};
    }
};

/// Finds nonnegative (s, t) with s*a + t*b = n; guaranteed to exist for
/// n >= (a-1)(b-1), and returned below the threshold too whenever a solution
/// happens to exist. Throws NotRepresentable otherwise.
CoinDecomposition decompose(long long a, long long b, long long n,
                            const DecomposePolicy& policy = {});

/// Largest integer with no nonnegative representation: a*b - a - b.
long long frobenius_number(long long a, long long b);

}  // namespace suebk
