#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suebk/weighing.hpp"

namespace suebk {

namespace {

// Entry vectors use ZERO_ENTRY = -1 for zero, so plain lexicographic
// comparison of int vectors already realizes the token order
// zero < exp 0 < exp 1 < ...
using Row = std::vector<int>;

struct PairChecker {
    int n;
    bool exact;

    bool orthogonal(const Row& u, const Row& v) const {
        if (exact) {
            long long p = 0, q = 0;
            for (size_t c = 0; c < u.size(); ++c) {
                if (u[c] < 0 || v[c] < 0) continue;
                const int e = ((u[c] - v[c]) % n + n) % n;
                // zeta^e as p + q*zeta for n in {1,2,3,4,6}
                switch (n) {
                    case 1: p += 1; break;
                    case 2: p += (e == 0) ? 1 : -1; break;
                    case 3:
                        if (e == 0) p += 1;
                        else if (e == 1) q += 1;
                        else { p -= 1; q -= 1; }
                        break;
                    case 4:
                        if (e == 0) p += 1;
                        else if (e == 1) q += 1;
                        else if (e == 2) p -= 1;
                        else q -= 1;
                        break;
                    case 6:
                        if (e == 0) p += 1;
                        else if (e == 1) q += 1;
                        else if (e == 2) { p -= 1; q += 1; }
                        else if (e == 3) p -= 1;
                        else if (e == 4) q -= 1;
                        else { p += 1; q -= 1; }
                        break;
                }
            }
            return p == 0 && q == 0;
        }
        Cplx sum{0.0, 0.0};
        for (size_t c = 0; c < u.size(); ++c) {
            if (u[c] < 0 || v[c] < 0) continue;
            sum += root_of_unity(((u[c] - v[c]) % n + n) % n, n);
        }
        return std::abs(sum) <= 1e-9 * static_cast<double>(u.size());
    }
};

// All rows of length a with exactly k nonzeros whose first nonzero has
// exponent 0, sorted lexicographically.
std::vector<Row> candidate_rows(int n, int k, int a) {
    std::vector<Row> rows;
    std::vector<int> support(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) support[static_cast<size_t>(i)] = i;
    while (true) {
        // exponent assignments for this support; first nonzero fixed to 0
        std::vector<int> exps(static_cast<size_t>(k), 0);
        while (true) {
            Row row(static_cast<size_t>(a), WeighingMatrix::ZERO_ENTRY);
            for (int i = 0; i < k; ++i)
                row[static_cast<size_t>(support[static_cast<size_t>(i)])] =
                    exps[static_cast<size_t>(i)];
            rows.push_back(std::move(row));
            int pos = k - 1;
            while (pos >= 1 && exps[static_cast<size_t>(pos)] == n - 1)
                exps[static_cast<size_t>(pos--)] = 0;
            if (pos < 1) break;
            ++exps[static_cast<size_t>(pos)];
        }
        // next k-combination of [0, a)
        int i = k - 1;
        while (i >= 0 && support[static_cast<size_t>(i)] == a - k + i) --i;
        if (i < 0) break;
        ++support[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            support[static_cast<size_t>(j)] = support[static_cast<size_t>(j - 1)] + 1;
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

struct Dfs {
    const std::vector<Row>& cand;
    PairChecker check;
    int k, a;
    std::uint64_t node_cap;  // 0 = unlimited
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::vector<int> chosen;      // candidate indices of placed rows
    std::vector<int> col_count;   // nonzeros per column so far

    bool feasible_columns(const Row& row, int rows_placed_after) const {
        const int remaining = a - rows_placed_after;
        for (int c = 0; c < a; ++c) {
            const int cnt = col_count[static_cast<size_t>(c)] + (row[static_cast<size_t>(c)] >= 0);
            if (cnt > k) return false;
            if (cnt + remaining < k) return false;
        }
        return true;
    }

    void apply(const Row& row, int dir) {
        for (int c = 0; c < a; ++c)
            if (row[static_cast<size_t>(c)] >= 0) col_count[static_cast<size_t>(c)] += dir;
    }

    // Places rows depth..a-1 using candidate indices > chosen.back().
    bool extend(int depth) {
        if (depth == a) return true;
        const size_t start = static_cast<size_t>(chosen.back()) + 1;
        for (size_t idx = start; idx < cand.size(); ++idx) {
            if (node_cap && ++nodes > node_cap) {
                budget_hit = true;
                return false;
            }
            if (!node_cap) ++nodes;
            const Row& row = cand[idx];
            if (!feasible_columns(row, depth + 1)) continue;
            bool ortho = true;
            for (int prev : chosen)
                if (!check.orthogonal(cand[static_cast<size_t>(prev)], row)) {
                    ortho = false;
                    break;
                }
            if (!ortho) continue;
            chosen.push_back(static_cast<int>(idx));
            apply(row, +1);
            if (extend(depth + 1)) return true;
            apply(row, -1);
            chosen.pop_back();
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult search(int n, int k, int a, const SearchBudget& budget) {
    if (n < 1) throw std::domain_error("search: root order must be >= 1");
    if (k < 2 || k > a)
        throw std::domain_error("search: need 2 <= k <= a, got k=" + std::to_string(k) +
                                ", a=" + std::to_string(a));

    // Candidate table size is C(a,k) * n^(k-1); refuse to materialize
    // anything enormous and report the budget cut instead.
    double projected = std::pow(static_cast<double>(n), k - 1);
    for (int i = 0; i < k; ++i) projected *= static_cast<double>(a - i) / (i + 1);
    if (projected > 2e7) return {SearchOutcome::BudgetExceeded, std::nullopt, 0};

    const auto cand = candidate_rows(n, k, a);
    Dfs dfs{cand,
            PairChecker{n, n == 1 || n == 2 || n == 3 || n == 4 || n == 6},
            k,
            a,
            budget.exhaustive ? 0 : budget.max_nodes};
    dfs.chosen.reserve(static_cast<size_t>(a));
    dfs.col_count.assign(static_cast<size_t>(a), 0);

    // Canonical first row: a-k zeros then k entries of exponent 0. Any
    // nonempty W(n,k,a) contains a member of this form (permute and scale
    // columns), so fixing it preserves completeness.
    dfs.chosen.push_back(0);
    dfs.apply(cand[0], +1);

    const bool found = dfs.extend(1);
    if (found) {
        std::vector<int> entries;
        entries.reserve(static_cast<size_t>(a) * a);
        for (int idx : dfs.chosen)
            entries.insert(entries.end(), cand[static_cast<size_t>(idx)].begin(),
                           cand[static_cast<size_t>(idx)].end());
        std::string name = "W(" + std::to_string(n) + "," + std::to_string(k) + "," +
                           std::to_string(a) + ")";
        WeighingMatrix w(std::move(name), a, k, n, std::move(entries));
        return {SearchOutcome::Found, std::move(w), dfs.nodes};
    }
    if (dfs.budget_hit) return {SearchOutcome::BudgetExceeded, std::nullopt, dfs.nodes};
    return {SearchOutcome::Nonexistent, std::nullopt, dfs.nodes};
}

}  // namespace suebk
