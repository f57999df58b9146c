#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "suebk/errors.hpp"
#include "suebk/frobenius.hpp"

using namespace suebk;

namespace {

// Brute-force representability table up to `limit`.
std::vector<char> representable_up_to(long long a, long long b, long long limit) {
    std::vector<char> rep(static_cast<size_t>(limit + 1), 0);
    rep[0] = 1;
    for (long long n = 1; n <= limit; ++n) {
        if (n >= a && rep[static_cast<size_t>(n - a)]) rep[static_cast<size_t>(n)] = 1;
        if (n >= b && rep[static_cast<size_t>(n - b)]) rep[static_cast<size_t>(n)] = 1;
    }
    return rep;
}

}  // namespace

TEST_CASE("decompose: minimal-t policy") {
    const CoinDecomposition d = decompose(3, 4, 47);
    CHECK(d.s == 13);
    CHECK(d.t == 2);
    CHECK(d.s * 3 + d.t * 4 == 47);
}

TEST_CASE("decompose: explicit override") {
    const CoinDecomposition d = decompose(3, 4, 47, DecomposePolicy::exact(9, 5));
    CHECK(d.s == 9);
    CHECK(d.t == 5);

    CHECK_THROWS_AS(decompose(3, 4, 47, DecomposePolicy::exact(9, 4)), std::domain_error);
    CHECK_THROWS_AS(decompose(3, 4, 47, DecomposePolicy::exact(-1, 2)), std::domain_error);
}

TEST_CASE("decompose: failures") {
    CHECK_THROWS_AS(decompose(3, 4, 5), NotRepresentable);
    CHECK_THROWS_AS(decompose(2, 4, 8), std::domain_error);  // not coprime
    CHECK_THROWS_AS(decompose(3, 4, -1), std::domain_error);
}

TEST_CASE("decompose succeeds below the threshold when possible") {
    const CoinDecomposition d = decompose(3, 4, 4);
    CHECK(d.s == 0);
    CHECK(d.t == 1);
}

TEST_CASE("frobenius numbers") {
    CHECK(frobenius_number(3, 4) == 5);
    CHECK(frobenius_number(2, 3) == 1);
    CHECK(frobenius_number(5, 7) == 23);
    CHECK_THROWS_AS(frobenius_number(2, 4), std::domain_error);
    CHECK_THROWS_AS(frobenius_number(1, 4), std::domain_error);
}

TEST_CASE("frobenius_number matches the brute-force oracle") {
    for (long long a = 2; a <= 12; ++a)
        for (long long b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const long long f = frobenius_number(a, b);
            const auto rep = representable_up_to(a, b, f + a * b);
            CHECK_FALSE(rep[static_cast<size_t>(f)]);
            for (long long n = f + 1; n <= f + a * b; ++n)
                CHECK(rep[static_cast<size_t>(n)]);
        }
}

TEST_CASE("all targets above the threshold decompose, exhaustively") {
    for (long long a = 2; a <= 12; ++a)
        for (long long b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long long n = (a - 1) * (b - 1); n <= 500; ++n) {
                const CoinDecomposition d = decompose(a, b, n);
                CHECK(d.s >= 0);
                CHECK(d.t >= 0);
                CHECK(d.s * a + d.t * b == n);
            }
        }
}
