#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "suebk/numerics.hpp"
#include "suebk/weighing.hpp"

using namespace suebk;

namespace {

// The 7x6 matrix with five nonzero entries on distinct rows and columns whose
// singular values can be read off as the entry moduli.
ComplexMatrix five_entry_matrix() {
    ComplexMatrix m(7, 6);
    m.at(Coord{1, 1}) = 1.0 / std::sqrt(2.0);
    m.at(Coord{2, 4}) = Cplx{0.0, 1.0} / std::sqrt(3.0);
    m.at(Coord{3, 3}) = 1.0 / std::sqrt(12.0);
    m.at(Coord{4, 2}) = root_of_unity(1, 3) / std::sqrt(24.0);
    m.at(Coord{5, 5}) = 1.0 / std::sqrt(24.0);
    return m;
}

ComplexMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = Cplx{gauss(rng), gauss(rng)};
    return m;
}

// Random unitary via Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_unitary(int n, std::mt19937& rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Cplx overlap{0.0, 0.0};
            for (int r = 0; r < n; ++r) overlap += std::conj(m.at(r, prev)) * m.at(r, c);
            for (int r = 0; r < n; ++r) m.at(r, c) -= overlap * m.at(r, prev);
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(m.at(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) m.at(r, c) /= nrm;
    }
    return m;
}

// Exact integer determinant by Laplace expansion, for the minor-rank oracle.
long long int_det(const std::vector<std::vector<long long>>& a) {
    const size_t n = a.size();
    if (n == 1) return a[0][0];
    long long det = 0;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            sub.push_back(std::move(row));
        }
        const long long term = a[0][c] * int_det(sub);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// Largest s such that some s x s submatrix has nonzero determinant.
int minor_rank(const std::vector<std::vector<long long>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    for (int s = std::min(rows, cols); s >= 1; --s) {
        std::vector<int> rsel(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) rsel[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<int> csel(static_cast<size_t>(s));
            for (int i = 0; i < s; ++i) csel[static_cast<size_t>(i)] = i;
            while (true) {
                std::vector<std::vector<long long>> sub(static_cast<size_t>(s),
                                                        std::vector<long long>(static_cast<size_t>(s)));
                for (int r = 0; r < s; ++r)
                    for (int c = 0; c < s; ++c)
                        sub[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                            a[static_cast<size_t>(rsel[static_cast<size_t>(r)])]
                             [static_cast<size_t>(csel[static_cast<size_t>(c)])];
                if (int_det(sub) != 0) return s;
                int i = s - 1;
                while (i >= 0 && csel[static_cast<size_t>(i)] == cols - s + i) --i;
                if (i < 0) break;
                ++csel[static_cast<size_t>(i)];
                for (int j = i + 1; j < s; ++j)
                    csel[static_cast<size_t>(j)] = csel[static_cast<size_t>(j - 1)] + 1;
            }
            int i = s - 1;
            while (i >= 0 && rsel[static_cast<size_t>(i)] == rows - s + i) --i;
            if (i < 0) break;
            ++rsel[static_cast<size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                rsel[static_cast<size_t>(j)] = rsel[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("hs_inner basics") {
    const auto e11 = ComplexMatrix::elementary(2, 2, {1, 1});
    const auto e12 = ComplexMatrix::elementary(2, 2, {1, 2});
    CHECK(hs_inner(e11, e11) == Cplx{1.0, 0.0});
    CHECK(hs_inner(e11, e12) == Cplx{0.0, 0.0});

    const auto m = five_entry_matrix();
    CHECK(std::abs(hs_inner(m, m) - Cplx{1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(hs_inner(e11, m), std::domain_error);
}

TEST_CASE("hs_inner is conjugate-symmetric and linear in the second slot") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_matrix(3, 4, rng);
        const auto b = random_matrix(3, 4, rng);
        CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
    }
}

TEST_CASE("singular values of the five-entry matrix are the entry moduli") {
    const auto sv = singular_values(five_entry_matrix());
    REQUIRE(sv.size() == 6);
    CHECK(sv[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(sv[2] == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-12));
    CHECK(sv[3] == doctest::Approx(1.0 / std::sqrt(24.0)).epsilon(1e-12));
    CHECK(sv[4] == doctest::Approx(1.0 / std::sqrt(24.0)).epsilon(1e-12));
    CHECK(sv[5] == doctest::Approx(0.0));
}

TEST_CASE("singular values: zero and diagonal matrices") {
    for (double s : singular_values(ComplexMatrix(3, 5))) CHECK(s == 0.0);

    ComplexMatrix diag(7, 7);
    const double amp = 1.0 / std::sqrt(3.0);
    diag.at(Coord{1, 1}) = diag.at(Coord{2, 2}) = diag.at(Coord{3, 3}) = amp;
    const auto sv = singular_values(diag);
    REQUIRE(sv.size() == 7);
    for (int i = 0; i < 3; ++i) CHECK(sv[static_cast<size_t>(i)] == doctest::Approx(amp));
    for (int i = 3; i < 7; ++i) CHECK(sv[static_cast<size_t>(i)] < 1e-14);
}

TEST_CASE("schmidt_rank golden values") {
    CHECK(schmidt_rank(five_entry_matrix()) == 5);
    CHECK(schmidt_rank(ComplexMatrix::elementary(3, 3, {1, 1})) == 1);

    // any nonzero matrix supported on a single row has rank 1
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix m(4, 6);
        std::normal_distribution<double> gauss;
        for (int c = 0; c < 6; ++c) m.at(2, c) = Cplx{gauss(rng), gauss(rng)};
        CHECK(schmidt_rank(m) == 1);
    }
}

TEST_CASE("schmidt_rank agrees with the exact minor-rank oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<long long>> ints(static_cast<size_t>(rows),
                                                 std::vector<long long>(static_cast<size_t>(cols)));
        ComplexMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const int v = entry(rng);
                ints[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
                m.at(r, c) = static_cast<double>(v);
            }
        CHECK(schmidt_rank(m, Tolerance{1e-7}) == minor_rank(ints));
    }
}

TEST_CASE("is_sesk") {
    CHECK_FALSE(is_sesk(five_entry_matrix(), 5));

    ComplexMatrix diag(7, 7);
    const double amp = 1.0 / std::sqrt(3.0);
    diag.at(Coord{1, 1}) = diag.at(Coord{2, 2}) = diag.at(Coord{3, 3}) = amp;
    CHECK(is_sesk(diag, 3));
    CHECK_FALSE(is_sesk(diag, 2));
    CHECK_FALSE(is_sesk(diag, 4));

    CHECK_THROWS_AS(is_sesk(diag, 1), std::domain_error);
    CHECK_THROWS_AS(is_sesk(diag, 8), std::domain_error);
}

TEST_CASE("matrix/state conversion") {
    const auto e11 = ComplexMatrix::elementary(2, 2, {1, 1});
    const BipartiteState s = matrix_to_state(e11);
    CHECK(s.d == 2);
    CHECK(s.dprime == 2);
    REQUIRE(s.amplitudes.size() == 4);
    CHECK(s.amplitudes[0] == Cplx{1.0, 0.0});
    CHECK(s.amplitudes[1] == Cplx{0.0, 0.0});

    ComplexMatrix bell(2, 2);
    bell.at(Coord{1, 1}) = bell.at(Coord{2, 2}) = 1.0 / std::sqrt(2.0);
    const BipartiteState sb = matrix_to_state(bell);
    CHECK(sb.amplitudes[0] == Cplx{1.0 / std::sqrt(2.0), 0.0});
    CHECK(sb.amplitudes[1] == Cplx{0.0, 0.0});
    CHECK(sb.amplitudes[2] == Cplx{0.0, 0.0});
    CHECK(sb.amplitudes[3] == Cplx{1.0 / std::sqrt(2.0), 0.0});

    BipartiteState broken{2, 2, {Cplx{1, 0}, Cplx{0, 0}, Cplx{0, 0}}};
    CHECK_THROWS_AS(state_to_matrix(broken), std::domain_error);
}

TEST_CASE("round trips and inner-product preservation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_matrix(3, 5, rng);
        const auto b = random_matrix(3, 5, rng);

        // exact round trip
        const auto back = state_to_matrix(matrix_to_state(a));
        CHECK(back.entries() == a.entries());

        // matrix inner product equals the amplitude inner product
        const auto sa = matrix_to_state(a).amplitudes;
        const auto sb = matrix_to_state(b).amplitudes;
        Cplx vec{0.0, 0.0};
        for (size_t i = 0; i < sa.size(); ++i) vec += std::conj(sa[i]) * sb[i];
        CHECK(std::abs(hs_inner(a, b) - vec) < 1e-12);
    }
}

TEST_CASE("unitary invariance of singular values") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = random_matrix(4, 6, rng);
        const auto u = random_unitary(4, rng);
        const auto v = random_unitary(6, rng);
        const auto sv1 = singular_values(m);
        const auto sv2 = singular_values(matmul(matmul(u, m), v));
        REQUIRE(sv1.size() == sv2.size());
        for (size_t i = 0; i < sv1.size(); ++i)
            CHECK(sv1[i] == doctest::Approx(sv2[i]).epsilon(1e-9));
    }
}

TEST_CASE("squared singular values sum to the squared norm") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(5, 4, rng);
        double sum = 0.0;
        for (double s : singular_values(m)) sum += s * s;
        CHECK(std::abs(sum - hs_inner(m, m).real()) < 1e-10 * std::max(1.0, sum));
    }
}
