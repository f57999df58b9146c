#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "suebk/construct.hpp"
#include "suebk/verify.hpp"

using namespace suebk;

namespace {

SuebkSet build_c7x7_n47() {
    const WeighingMatrix a = fourier_matrix(3);
    const WeighingMatrix b = o4();
    return build(plan_type1(7, 7, 3, a, b, 47, DecomposePolicy::exact(9, 5)),
                 registry_for({a, b}));
}

// Row-by-row enumeration of injective cell subsets; independent of the
// augmenting-path implementation.
int brute_force_matching(const std::vector<Coord>& cells) {
    std::vector<int> rows;
    for (const Coord& c : cells) rows.push_back(c.row);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    int best = 0;
    std::set<int> used_cols;
    auto rec = [&](auto&& self, size_t row_idx, int size) -> void {
        best = std::max(best, size);
        if (row_idx == rows.size()) return;
        self(self, row_idx + 1, size);  // skip this row
        for (const Coord& c : cells) {
            if (c.row != rows[row_idx] || used_cols.count(c.col)) continue;
            used_cols.insert(c.col);
            self(self, row_idx + 1, size + 1);
            used_cols.erase(c.col);
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("orthonormality check") {
    const SuebkSet set = build_c7x7_n47();
    const auto ok = check_orthonormal(set.matrices);
    CHECK(ok.pass);
    CHECK(ok.max_deviation < 1e-9);

    auto dup = set.matrices;
    dup.push_back(dup.front());
    const auto bad = check_orthonormal(dup);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_deviation == doctest::Approx(1.0));

    ComplexMatrix unit(2, 2);
    unit.at(0, 0) = 1.0;
    CHECK(check_orthonormal({unit}).pass);

    CHECK_THROWS_AS(check_orthonormal({}), std::domain_error);
    CHECK_THROWS_AS(check_orthonormal({unit, ComplexMatrix(3, 3)}), std::domain_error);
}

TEST_CASE("per-state SESk screening") {
    const SuebkSet set = build_c7x7_n47();
    CHECK(check_sesk_all(set.matrices, 3).empty());
    CHECK(check_sesk_all(set.matrices, 4).size() == 47);

    ComplexMatrix odd(7, 7);
    odd.at(Coord{1, 1}) = 1.0 / std::sqrt(2.0);
    odd.at(Coord{2, 2}) = 1.0 / std::sqrt(2.0);
    auto states = set.matrices;
    states[10] = odd;  // two unequal-with-k values at index 10
    const auto failures = check_sesk_all(states, 3);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0] == 10);
}

TEST_CASE("complement support extraction") {
    const SuebkSet set = build_c7x7_n47();
    const auto comp = complement_support(7, 7, set.matrices);
    CHECK(comp.dimension == 2);
    REQUIRE(comp.coordinate_supported);
    REQUIRE(comp.support.size() == 2);
    CHECK(comp.support[0] == Coord{7, 1});
    CHECK(comp.support[1] == Coord{7, 2});
    CHECK(comp.reorth_deviation < 1e-9);

    const auto e11 = ComplexMatrix::elementary(2, 2, {1, 1});
    const auto tiny = complement_support(2, 2, {e11});
    CHECK(tiny.dimension == 3);
    REQUIRE(tiny.coordinate_supported);
    CHECK(tiny.support == std::vector<Coord>{{1, 2}, {2, 1}, {2, 2}});

    ComplexMatrix mixed(2, 2);
    mixed.at(0, 0) = mixed.at(0, 1) = 1.0 / std::sqrt(2.0);
    const auto spread = complement_support(2, 2, {mixed});
    CHECK(spread.dimension == 3);
    CHECK_FALSE(spread.coordinate_supported);
    CHECK(spread.offdiag_max > 0.4);
}

TEST_CASE("max matching golden cases") {
    CHECK(max_matching({{7, 1}, {7, 2}}).size == 1);

    // full row 8, column 9 down to row 7, and two extra cells in column 8
    std::vector<Coord> cells;
    for (int j = 1; j <= 9; ++j) cells.push_back({8, j});
    for (int i = 1; i <= 7; ++i) cells.push_back({i, 9});
    cells.push_back({6, 8});
    cells.push_back({7, 8});
    const auto res = max_matching(cells);
    CHECK(res.size == 3);
    CHECK(res.size == brute_force_matching(cells));

    std::vector<Coord> diag;
    for (int i = 1; i <= 5; ++i) diag.push_back({i, i});
    CHECK(max_matching(diag).size == 5);

    CHECK(max_matching({}).size == 0);
}

TEST_CASE("matching equals brute force and bounds span ranks") {
    std::mt19937 rng(59);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        const int dp = 2 + static_cast<int>(rng() % 5);
        std::vector<Coord> cells;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= dp; ++j)
                if (rng() % 3 == 0) cells.push_back({i, j});
        const auto res = max_matching(cells);
        CHECK(res.size == brute_force_matching(cells));

        // Koenig: the returned line cover has matching size and covers T
        CHECK(static_cast<int>(res.cover_rows.size() + res.cover_cols.size()) == res.size);
        for (const Coord& c : cells) {
            const bool covered =
                std::count(res.cover_rows.begin(), res.cover_rows.end(), c.row) ||
                std::count(res.cover_cols.begin(), res.cover_cols.end(), c.col);
            CHECK(covered);
        }

        if (cells.empty()) continue;
        // random span elements never exceed the matching rank bound
        for (int probe = 0; probe < 20; ++probe) {
            ComplexMatrix m(d, dp);
            for (const Coord& c : cells) m.at(c) = Cplx{gauss(rng), gauss(rng)};
            CHECK(schmidt_rank(m, Tolerance{1e-7}) <= res.size);
        }
        // the matched cells realize the bound
        ComplexMatrix witness(d, dp);
        for (const Coord& c : res.matched) witness.at(c) = 1.0;
        CHECK(schmidt_rank(witness) == res.size);
    }
}

TEST_CASE("full certification of a constructed set") {
    const SuebkSet set = build_c7x7_n47();
    const VerificationReport rep = check_unextendible(7, 7, set.matrices, 3);
    CHECK(rep.verdict == Verdict::Unextendible);
    CHECK(rep.ortho_pass);
    CHECK(rep.sesk_failures.empty());
    REQUIRE(rep.complement.matching.has_value());
    CHECK(rep.complement.matching->size == 1);
}

TEST_CASE("dropping any state forfeits the certificate") {
    const SuebkSet set = build_c7x7_n47();
    // spot-check a few drop positions here; the acceptance suite runs all 47
    for (int drop : {0, 13, 27, 46}) {
        auto states = set.matrices;
        states.erase(states.begin() + drop);
        const VerificationReport rep = check_unextendible(7, 7, states, 3);
        CHECK(rep.verdict != Verdict::Unextendible);
    }
}

TEST_CASE("a large coordinate complement yields an explicit witness") {
    // span{E_11} in C^3 (x) C^3: the complement holds rank-2 matrices
    const auto e11 = ComplexMatrix::elementary(3, 3, {1, 1});
    const VerificationReport rep = check_unextendible(3, 3, {e11}, 2);
    CHECK(rep.verdict == Verdict::Extendible);
    REQUIRE(rep.witness.has_value());
    CHECK(is_sesk(*rep.witness, 2));
    CHECK(std::abs(hs_inner(e11, *rep.witness)) < 1e-12);
}

TEST_CASE("non-coordinate complements are never certified") {
    ComplexMatrix mixed(2, 2);
    mixed.at(0, 0) = mixed.at(0, 1) = 1.0 / std::sqrt(2.0);
    const VerificationReport rep = check_unextendible(2, 2, {mixed}, 2);
    CHECK(rep.verdict != Verdict::Unextendible);
    if (rep.verdict == Verdict::Extendible) {
        REQUIRE(rep.witness.has_value());
        CHECK(is_sesk(*rep.witness, 2));
        CHECK(std::abs(hs_inner(mixed, *rep.witness)) < 1e-9);
    }
}

TEST_CASE("failed checks block the unextendible verdict even with a small complement") {
    const SuebkSet set = build_c7x7_n47();
    auto states = set.matrices;
    for (auto& z : states[0].entries()) z *= 0.9;  // break normalization only
    const VerificationReport rep = check_unextendible(7, 7, states, 3);
    CHECK_FALSE(rep.ortho_pass);
    CHECK(rep.verdict != Verdict::Unextendible);
}
