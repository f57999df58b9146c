#include "suebk/frobenius.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "suebk/errors.hpp"

namespace suebk {

CoinDecomposition decompose(long long a, long long b, long long n,
                            const DecomposePolicy& policy) {
    if (a < 1 || b < 1) throw std::domain_error("decompose: block sizes must be positive");
    if (n < 0) throw std::domain_error("decompose: target must be nonnegative");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("decompose: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                                ") != 1");
    if (policy.explicit_st) {
        const auto [s, t] = *policy.explicit_st;
        if (s < 0 || t < 0)
            throw std::domain_error("decompose: explicit (s,t) must be nonnegative");
        if (s * a + t * b != n)
            throw std::domain_error("decompose: explicit " + std::to_string(s) + "*" +
                                    std::to_string(a) + " + " + std::to_string(t) + "*" +
                                    std::to_string(b) + " != " + std::to_string(n));
        return {a, b, n, s, t};
    }
    for (long long t = 0; t * b <= n; ++t) {
        if ((n - t * b) % a == 0) return {a, b, n, (n - t * b) / a, t};
    }
    throw NotRepresentable("no nonnegative s,t with s*" + std::to_string(a) + " + t*" +
                           std::to_string(b) + " = " + std::to_string(n));
}

long long frobenius_number(long long a, long long b) {
    if (a < 2 || b < 2) throw std::domain_error("frobenius_number: need a, b >= 2");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("frobenius_number: gcd(" + std::to_string(a) + "," +
                                std::to_string(b) + ") != 1");
    return a * b - a - b;
}

}  // namespace suebk
