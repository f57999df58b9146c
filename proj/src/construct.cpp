#include "suebk/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "suebk/errors.hpp"
#include "suebk/verify.hpp"

namespace suebk {

WeighingRegistry registry_for(const std::vector<WeighingMatrix>& ws) {
    WeighingRegistry reg;
    for (const auto& w : ws) reg.emplace(w.name(), w);
    return reg;
}

ComplexMatrix block_matrix(int d, int dprime, const CoordBlock& block,
                           const std::vector<Cplx>& v) {
    if (static_cast<size_t>(block.size()) != v.size())
        throw std::domain_error("block_matrix: block has " + std::to_string(block.size()) +
                                " cells but vector has " + std::to_string(v.size()) +
                                " entries");
    ComplexMatrix m(d, dprime);
    for (int r = 0; r < block.size(); ++r) {
        const Coord& c = block.coords[static_cast<size_t>(r)];
        if (c.row < 1 || c.row > d || c.col < 1 || c.col > dprime)
            throw std::domain_error("block_matrix: cell " + to_string(c) + " outside " +
                                    std::to_string(d) + "x" + std::to_string(dprime));
        m.at(c) = v[static_cast<size_t>(r)];
    }
    return m;
}

namespace {

std::string block_label(const PlacementPlan& plan, size_t idx) {
    return "block " + std::to_string(idx + 1) + " (" + plan.blocks[idx].weighing_id + ")";
}

CoordBlock kept_after_deletion(const OrderedGrid& grid, const std::vector<Coord>& deleted) {
    std::set<Coord> del(deleted.begin(), deleted.end());
    if (del.size() != deleted.size())
        throw PlanInvalid("duplicate deleted coordinate");
    for (const Coord& c : del)
        if (!grid.contains(c))
            throw PlanInvalid("deleted coordinate " + to_string(c) + " outside active grid");
    std::vector<Coord> keep;
    keep.reserve(static_cast<size_t>(grid.size() - static_cast<int>(del.size())));
    for (const Coord& c : grid.full_order())
        if (!del.count(c)) keep.push_back(c);
    if (keep.empty()) throw PlanInvalid("every cell of the active grid is deleted");
    CoordBlock block;
    block.coords = std::move(keep);  // full_order is already sorted by order index
    return block;
}

// Consecutive segments of the kept order: `count` blocks of `size` cells
// assigned to `id`, starting at *cursor.
void append_segments(const PlacementPlan& plan, std::vector<PlanBlock>& blocks, int* cursor,
                     int count, int size, const std::string& id) {
    for (int i = 0; i < count; ++i) {
        if (*cursor + size > plan.kept.size())
            throw PlanInvalid("blocks overrun the kept set at cell rank " +
                              std::to_string(*cursor + 1));
        PlanBlock b;
        b.weighing_id = id;
        b.coords.coords.assign(plan.kept.coords.begin() + *cursor,
                               plan.kept.coords.begin() + *cursor + size);
        blocks.push_back(std::move(b));
        *cursor += size;
    }
}

void check_weights_and_gcd(const WeighingMatrix& a, const WeighingMatrix& b, int k) {
    const auto ra = validate(a);
    if (!ra.valid || ra.weight != k)
        throw UnsupportedParameters("matrix " + a.name() + " is not a valid weight-" +
                                    std::to_string(k) + " weighing matrix");
    const auto rb = validate(b);
    if (!rb.valid || rb.weight != k)
        throw UnsupportedParameters("matrix " + b.name() + " is not a valid weight-" +
                                    std::to_string(k) + " weighing matrix");
    if (std::gcd(a.order(), b.order()) != 1)
        throw UnsupportedParameters("gcd(a,b) = gcd(" + std::to_string(a.order()) + "," +
                                    std::to_string(b.order()) + ") != 1");
}

}  // namespace

void validate_plan(const PlacementPlan& plan, const WeighingRegistry& registry) {
    if (plan.k < 2 || plan.k > std::min(plan.d, plan.dprime))
        throw PlanInvalid("k=" + std::to_string(plan.k) + " outside [2,min(d,d')]");
    if (plan.offset_row < 0 || plan.offset_col < 0 ||
        plan.offset_row + plan.active_rows > plan.d ||
        plan.offset_col + plan.active_cols > plan.dprime)
        throw PlanInvalid("active grid does not fit inside the ambient space");

    const OrderedGrid grid = plan.active_grid();
    const CoordBlock expect_kept = kept_after_deletion(grid, plan.deleted);
    if (expect_kept.coords != plan.kept.coords)
        throw PlanInvalid("kept set does not match active grid minus deletions");

    const long long n = plan.kept.size();
    if (n > static_cast<long long>(plan.d) * plan.dprime - 1)
        throw PlanInvalid("N=" + std::to_string(n) + " exceeds dd'-1");

    std::set<Coord> seen;
    long long covered = 0;
    for (size_t i = 0; i < plan.blocks.size(); ++i) {
        const PlanBlock& b = plan.blocks[i];
        auto it = registry.find(b.weighing_id);
        if (it == registry.end())
            throw PlanInvalid(block_label(plan, i) + ": unknown weighing matrix");
        const WeighingMatrix& w = it->second;
        if (b.coords.size() != w.order())
            throw PlanInvalid(block_label(plan, i) + ": " + std::to_string(b.coords.size()) +
                              " cells but matrix order is " + std::to_string(w.order()));
        if (w.weight() != plan.k)
            throw PlanInvalid(block_label(plan, i) + ": weight " + std::to_string(w.weight()) +
                              " != k=" + std::to_string(plan.k));
        if (!window_distinct(b.coords.coords, b.coords.size()))
            throw PlanInvalid(block_label(plan, i) + ": cells share a row or column");
        int prev = 0;
        for (const Coord& c : b.coords.coords) {
            if (!seen.insert(c).second)
                throw PlanInvalid(block_label(plan, i) + ": cell " + to_string(c) +
                                  " already covered");
            const int idx = grid.order_index(c);
            if (idx <= prev)
                throw PlanInvalid(block_label(plan, i) + ": cells out of inherited order");
            prev = idx;
        }
        covered += b.coords.size();
    }
    if (covered != n || static_cast<long long>(seen.size()) != n)
        throw PlanInvalid("blocks cover " + std::to_string(covered) + " cells, kept set has " +
                          std::to_string(n));
}

PlacementPlan plan_type1(int d, int dprime, int k, const WeighingMatrix& a,
                         const WeighingMatrix& b, long long n,
                         const DecomposePolicy& policy) {
    check_weights_and_gcd(a, b, k);
    const int mx = std::max(a.order(), b.order());
    if (d < mx + k)
        throw UnsupportedParameters("d=" + std::to_string(d) + " < max{a,b}+k=" +
                                    std::to_string(mx + k));
    if (dprime < mx + 1)
        throw UnsupportedParameters("d'=" + std::to_string(dprime) + " < max{a,b}+1=" +
                                    std::to_string(mx + 1));
    const long long lo = static_cast<long long>(d - k + 1) * dprime;
    const long long hi = static_cast<long long>(d) * dprime - 1;
    if (n < lo || n > hi)
        throw UnsupportedParameters("N=" + std::to_string(n) + " outside [" +
                                    std::to_string(lo) + "," + std::to_string(hi) +
                                    "] = [(d-k+1)d', dd'-1]");

    const int q = static_cast<int>(n / dprime);
    const int r = static_cast<int>(n % dprime);

    PlacementPlan plan;
    plan.d = d;
    plan.dprime = dprime;
    plan.k = k;
    plan.active_rows = q + 1;
    plan.active_cols = dprime;
    plan.kind = "type1";
    for (int i = 1; i <= dprime - r; ++i) plan.deleted.push_back({q + 1, i});
    plan.kept = kept_after_deletion(plan.active_grid(), plan.deleted);

    const CoinDecomposition dec = decompose(a.order(), b.order(), n, policy);
    plan.split = {dec.s, dec.t};
    int cursor = 0;
    append_segments(plan, plan.blocks, &cursor, static_cast<int>(dec.s), a.order(), a.name());
    append_segments(plan, plan.blocks, &cursor, static_cast<int>(dec.t), b.order(), b.name());

    validate_plan(plan, registry_for({a, b}));
    return plan;
}

PlacementPlan plan_type2(int d, int dprime, int k, const WeighingMatrix& a,
                         const WeighingMatrix& b, int m1, int m2, long long n,
                         const DecomposePolicy& policy) {
    check_weights_and_gcd(a, b, k);
    const int mx = std::max(a.order(), b.order());
    const int row_slack = d - m1;
    const int col_slack = dprime - m2;
    if (row_slack < 0 || col_slack < 0)
        throw UnsupportedParameters("need m1 <= d and m2 <= d'");
    if (m1 < mx + 2 || m2 < mx + 2)
        throw UnsupportedParameters("m1=" + std::to_string(m1) + ", m2=" + std::to_string(m2) +
                                    " must both be >= max{a,b}+2=" + std::to_string(mx + 2));
    const int slack = row_slack + col_slack;
    if (slack < 1 || slack >= k)
        throw UnsupportedParameters("r+s=" + std::to_string(slack) + " outside [1," +
                                    std::to_string(k - 1) + "]");
    const long long lo = static_cast<long long>(m1) * m2;
    const long long hi = static_cast<long long>(d) * dprime - 1;
    if (n < lo || n > hi)
        throw std::domain_error("N=" + std::to_string(n) + " outside [m1*m2, dd'-1] = [" +
                                std::to_string(lo) + "," + std::to_string(hi) + "]");

    PlacementPlan plan;
    plan.d = d;
    plan.dprime = dprime;
    plan.k = k;
    plan.kind = "type2";

    if (n < static_cast<long long>(d) * m2) {
        // Row interval [(m1+i0)m2, (m1+i0+1)m2): grow by rows, delete along
        // the last row.
        const int i0 = static_cast<int>(n / m2) - m1;
        const int f = static_cast<int>(n - static_cast<long long>(m1 + i0) * m2);
        plan.active_rows = m1 + i0 + 1;
        plan.active_cols = m2;
        for (int i = 1; i <= m2 - f; ++i) plan.deleted.push_back({m1 + i0 + 1, i});
    } else {
        // Column interval [d(m2+j0), d(m2+j0+1)): the mirrored construction,
        // deleting along the last column.
        const int j0 = static_cast<int>(n / d) - m2;
        const int f = static_cast<int>(n - static_cast<long long>(d) * (m2 + j0));
        plan.active_rows = d;
        plan.active_cols = m2 + j0 + 1;
        for (int i = 1; i <= d - f; ++i) plan.deleted.push_back({i, m2 + j0 + 1});
    }
    plan.kept = kept_after_deletion(plan.active_grid(), plan.deleted);

    const CoinDecomposition dec = decompose(a.order(), b.order(), n, policy);
    plan.split = {dec.s, dec.t};
    int cursor = 0;
    append_segments(plan, plan.blocks, &cursor, static_cast<int>(dec.s), a.order(), a.name());
    append_segments(plan, plan.blocks, &cursor, static_cast<int>(dec.t), b.order(), b.name());

    validate_plan(plan, registry_for({a, b}));
    return plan;
}

PlacementPlan manual_plan(int d, int dprime, int k, int active_rows, int active_cols,
                          const std::vector<Coord>& deleted,
                          const std::vector<BlockSpec>& specs,
                          const WeighingRegistry& registry) {
    PlacementPlan plan;
    plan.d = d;
    plan.dprime = dprime;
    plan.k = k;
    plan.active_rows = active_rows;
    plan.active_cols = active_cols;
    plan.deleted = deleted;
    plan.kind = "manual";
    const OrderedGrid grid = plan.active_grid();
    plan.kept = kept_after_deletion(grid, deleted);

    bool any_explicit = false, any_segment = false;
    for (const auto& s : specs) (s.coords.empty() ? any_segment : any_explicit) = true;
    if (any_explicit && any_segment)
        throw PlanInvalid("mixing explicit-cell blocks with order-consuming blocks");

    int cursor = 0;
    for (const auto& spec : specs) {
        auto it = registry.find(spec.weighing_id);
        if (it == registry.end())
            throw PlanInvalid("unknown weighing matrix '" + spec.weighing_id + "'");
        if (spec.coords.empty()) {
            if (spec.count < 1) throw PlanInvalid("block count must be >= 1");
            append_segments(plan, plan.blocks, &cursor, spec.count, it->second.order(),
                            spec.weighing_id);
        } else {
            if (spec.count != 1)
                throw PlanInvalid("explicit-cell block cannot carry a count");
            PlanBlock b;
            b.weighing_id = spec.weighing_id;
            b.coords = inherited_order(grid, spec.coords);
            plan.blocks.push_back(std::move(b));
        }
    }
    validate_plan(plan, registry);
    return plan;
}

SuebkSet build(const PlacementPlan& plan, const WeighingRegistry& registry) {
    validate_plan(plan, registry);
    SuebkSet set;
    set.d = plan.d;
    set.dprime = plan.dprime;
    set.k = plan.k;
    set.plan = plan;
    set.provenance = plan.kind;
    set.matrices.reserve(static_cast<size_t>(plan.n()));
    for (const PlanBlock& b : plan.blocks) {
        const WeighingMatrix& w = registry.at(b.weighing_id);
        CoordBlock shifted = b.coords;
        for (Coord& c : shifted.coords) {
            c.row += plan.offset_row;
            c.col += plan.offset_col;
        }
        for (int x = 1; x <= w.order(); ++x)
            set.matrices.push_back(block_matrix(plan.d, plan.dprime, shifted, scaled_row(w, x)));
    }
    return set;
}

SuebkSet auto_generate(int d, int dprime, int k, long long n, const Catalog& catalog,
                       const DecomposePolicy& policy) {
    if (k < 2 || k > std::min(d, dprime))
        throw std::domain_error("auto_generate: k=" + std::to_string(k) +
                                " outside [2,min(d,d')]");
    if (n < 1 || n > static_cast<long long>(d) * dprime - 1)
        throw std::domain_error("auto_generate: N=" + std::to_string(n) +
                                " outside [1, dd'-1]");

    const WeighingMatrix a = fourier_matrix(k);
    std::optional<WeighingMatrix> b = catalog.lookup(k, k + 1);
    if (!b) {
        for (int root : {1, 2, 3, 4, 6, k}) {
            const auto res = search(root, k, k + 1, SearchBudget{2'000'000, false});
            if (res.outcome == SearchOutcome::Found) {
                b = res.matrix;
                break;
            }
        }
    }
    if (!b)
        throw IngredientMissing("no W(n," + std::to_string(k) + "," + std::to_string(k + 1) +
                                ") in the catalog and bounded search over n in {1,2,3,4,6," +
                                std::to_string(k) + "} found none");

    const WeighingRegistry registry = registry_for({a, *b});
    std::optional<PlacementPlan> plan;
    std::string type1_reason;
    try {
        plan = plan_type1(d, dprime, k, a, *b, n, policy);
    } catch (const UnsupportedParameters& e) {
        type1_reason = e.what();
    }

    if (!plan) {
        // Admissible splits d = m1+s, d' = m2+r, preferring the smallest
        // r+s and then the largest covered base m1*m2.
        const int lo = std::max(a.order(), b->order()) + 2;
        struct Split {
            int slack, area_neg, s, m1, m2;
        };
        std::vector<Split> splits;
        for (int m1 = lo; m1 <= d; ++m1)
            for (int m2 = lo; m2 <= dprime; ++m2) {
                const int s = d - m1, r = dprime - m2;
                if (s + r < 1 || s + r >= k) continue;
                if (n < static_cast<long long>(m1) * m2) continue;
                splits.push_back({s + r, -m1 * m2, s, m1, m2});
            }
        std::sort(splits.begin(), splits.end(), [](const Split& x, const Split& y) {
            return std::tie(x.slack, x.area_neg, x.s, x.m1) <
                   std::tie(y.slack, y.area_neg, y.s, y.m1);
        });
        for (const Split& sp : splits) {
            try {
                plan = plan_type2(d, dprime, k, a, *b, sp.m1, sp.m2, n, policy);
                break;
            } catch (const UnsupportedParameters&) {
                continue;
            }
        }
    }

    if (!plan) {
        std::ostringstream msg;
        msg << "no construction covers (d,d',k,N)=(" << d << "," << dprime << "," << k << ","
            << n << ")";
        if (!type1_reason.empty()) msg << "; Type I: " << type1_reason;
        msg << "; Type II: no admissible (m1,m2) split; encode a manual plan instead";
        throw UnsupportedParameters(msg.str());
    }

    SuebkSet set = build(*plan, registry);
    const VerificationReport rep = check_unextendible(d, dprime, set.matrices, k);
    if (rep.verdict != Verdict::Unextendible)
        throw std::runtime_error("auto_generate: self-verification failed (verdict " +
                                 to_string(rep.verdict) + ")");
    return set;
}

}  // namespace suebk
