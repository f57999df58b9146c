#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suebk/coord.hpp"
#include "suebk/frobenius.hpp"
#include "suebk/numerics.hpp"
#include "suebk/weighing.hpp"

namespace suebk {

/// A run of kept cells paired with the weighing matrix whose scaled rows
/// fill it. The block emits one state per weighing row, so a valid block
/// has exactly order-many cells.
struct PlanBlock {
    CoordBlock coords;        // ordered by the active grid's inherited order
    std::string weighing_id;  // key into the registry passed to build
};

/// Complete recipe for a state set: an active sub-grid embedded top-left in
/// the ambient d x d' space, deletions from it, the kept cells in inherited
/// order, and their partition into weighing blocks.
struct PlacementPlan {
    int d = 0;
    int dprime = 0;
    int k = 0;
    int active_rows = 0;
    int active_cols = 0;
    int offset_row = 0;  // active grid offset inside the ambient space;
    int offset_col = 0;  // top-left for every recipe here
    std::vector<Coord> deleted;  // active-grid coordinates
    CoordBlock kept;
    std::vector<PlanBlock> blocks;
    std::optional<std::pair<long long, long long>> split;  // (s,t) used, if any
    std::string kind;  // "type1" | "type2" | "manual"

    OrderedGrid active_grid() const { return OrderedGrid(active_rows, active_cols); }
    int n() const { return kept.size(); }
};

/// Orthonormal set of coordinate-block states plus how it was made.
struct SuebkSet {
    int d = 0;
    int dprime = 0;
    int k = 0;
    std::vector<ComplexMatrix> matrices;
    std::optional<PlacementPlan> plan;
    std::string provenance;  // plan kind, or "external"

    int n() const { return static_cast<int>(matrices.size()); }
};

using WeighingRegistry = std::map<std::string, WeighingMatrix>;

WeighingRegistry registry_for(const std::vector<WeighingMatrix>& ws);

/// Places v through the block's inherited order: entry v[rank-1] lands on the
/// cell of that rank; all other cells are zero.
ComplexMatrix block_matrix(int d, int dprime, const CoordBlock& block,
                           const std::vector<Cplx>& v);

/// Checks every plan invariant (coverage, disjointness, block sizes vs
/// weighing orders, per-block row/column distinctness, weight == k).
/// Throws PlanInvalid naming the first offending block.
void validate_plan(const PlacementPlan& plan, const WeighingRegistry& registry);

/// Type I recipe: N = q*d' + r, active grid (q+1) x d', tail-row deletion,
/// kept cells split into coin-decomposition blocks along the inherited order.
/// Hypotheses: gcd(a,b) = 1, both weights k, d >= max{a,b}+k,
/// d' >= max{a,b}+1, N in [(d-k+1)d', dd'-1].
PlacementPlan plan_type1(int d, int dprime, int k, const WeighingMatrix& a,
                         const WeighingMatrix& b, long long n,
                         const DecomposePolicy& policy = {});

/// Type II recipe for d = m1+s, d' = m2+r with 1 <= r+s < k and
/// m1, m2 >= max{a,b}+2. N in [m1*m2, dd'-1] falls into a unique row
/// interval [(m1+i)m2, (m1+i+1)m2) or column interval [d(m2+j), d(m2+j+1));
/// the active grid grows by rows or columns accordingly, with the deletion
/// running along the last row (or mirrored, the last column).
PlacementPlan plan_type2(int d, int dprime, int k, const WeighingMatrix& a,
                         const WeighingMatrix& b, int m1, int m2, long long n,
                         const DecomposePolicy& policy = {});

/// One block specification for a hand-written plan: either `count`
/// consecutive blocks of the matrix taken along the inherited order, or one
/// block on explicitly listed cells.
struct BlockSpec {
    std::string weighing_id;
    int count = 1;
    std::vector<Coord> coords;  // explicit cells; empty = consume in order
};

/// Validated plan from explicit layout data. Either every spec is
/// order-consuming or every spec lists its cells.
PlacementPlan manual_plan(int d, int dprime, int k, int active_rows, int active_cols,
                          const std::vector<Coord>& deleted,
                          const std::vector<BlockSpec>& specs,
                          const WeighingRegistry& registry);

/// Emits the plan's N states: for each block and each row of its weighing
/// matrix, one block matrix carrying the 1/sqrt(k)-scaled row.
SuebkSet build(const PlacementPlan& plan, const WeighingRegistry& registry);

/// End-to-end generator: pairs CH_k with a W(n,k,k+1) from the catalog (or a
/// bounded search over small root orders), picks a Type I plan when its
/// hypotheses hold and otherwise the best-covering Type II split (smallest
/// r+s, then largest m1*m2), builds, and self-verifies.
SuebkSet auto_generate(int d, int dprime, int k, long long n,
                       const Catalog& catalog = Catalog(),
                       const DecomposePolicy& policy = {});

}  // namespace suebk
