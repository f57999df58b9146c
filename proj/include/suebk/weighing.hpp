#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suebk/numerics.hpp"

namespace suebk {

/// Square matrix whose nonzero entries are n-th roots of unity, with
/// A A^dag = weight * I. Entries are stored exactly: ZERO_ENTRY for zero,
/// otherwise the exponent t in [0, root_order) meaning e^(2*pi*i*t/n).
class WeighingMatrix {
public:
    static constexpr int ZERO_ENTRY = -1;

    WeighingMatrix() = default;
    WeighingMatrix(std::string name, int order, int weight, int root_order,
                   std::vector<int> entries);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int weight() const { return weight_; }
    int root_order() const { return root_order_; }

    int ent(int r, int c) const { return entries_[static_cast<size_t>(r) * order_ + c]; }
    bool is_zero(int r, int c) const { return ent(r, c) == ZERO_ENTRY; }
    const std::vector<int>& entries() const { return entries_; }

    /// Row rendered to complex values (no scaling).
    std::vector<Cplx> row_values(int x) const;  // 1-based x

    ComplexMatrix to_complex() const;

    bool operator==(const WeighingMatrix&) const = default;

private:
    std::string name_;
    int order_ = 0;
    int weight_ = 0;
    int root_order_ = 1;
    std::vector<int> entries_;  // row-major order_ x order_
};

/// e^(2*pi*i*t/n)
Cplx root_of_unity(int t, int n);

/// Fourier matrix CH_d: entry (x,y) = omega_d^((x-1)(y-1)); lies in W(d,d,d).
WeighingMatrix fourier_matrix(int d);

/// The shipped W(2,3,4) instance (entries +-1, first row 0 1 1 1).
WeighingMatrix o4();
/// The shipped W(3,4,5) instance (cube-root entries, first row 1 1 1 1 0).
WeighingMatrix o5();

struct ValidationReport {
    bool valid = false;
    int weight = 0;
    double max_deviation = 0.0;
    std::string reason;
};

/// Numeric check: every row and column has the same nonzero count k and both
/// A A^dag and A^dag A are within tol.eps * k of k*I entrywise.
ValidationReport validate(const WeighingMatrix& a, const Tolerance& tol = {});

/// Exact cyclotomic-integer check, available for root orders 1, 2, 3, 4, 6.
/// Returns nullopt for other root orders.
std::optional<bool> validate_exact(const WeighingMatrix& a);

/// Row x rendered to complex values and scaled by 1/sqrt(weight); unit norm.
std::vector<Cplx> scaled_row(const WeighingMatrix& a, int x);  // 1-based x

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Keyed store of weighing matrices. Fourier matrices are synthesized on the
/// fly for a == k; the O4/O5 instances are built in; further records come
/// from catalog files (typically persisted search results).
class Catalog {
public:
    Catalog();  // builtins only

    /// First match for weight k and order a: CH_k when a == k, then builtins,
    /// then stored records (smallest root order first).
    std::optional<WeighingMatrix> lookup(int k, int a) const;

    std::optional<WeighingMatrix> lookup_exact(int n, int k, int a) const;

    void add(const WeighingMatrix& w);

    /// Builtins plus stored records, in listing order.
    std::vector<WeighingMatrix> list() const;

    void load_file(const std::string& path);  // merges records into the store
    void save_file(const std::string& path) const;

private:
    std::vector<WeighingMatrix> builtins_;
    std::map<std::tuple<int, int, int>, WeighingMatrix> stored_;  // (n,k,a) -> matrix
};

/// Catalog text format: one record per matrix, blank-line separated:
///   n k a
///   <a rows of a space-separated tokens, "." for zero, else the exponent>
/// write_catalog output re-parses to identical records byte for byte.
std::vector<WeighingMatrix> read_catalog(std::istream& in);
void write_catalog(std::ostream& out, const std::vector<WeighingMatrix>& ws);

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct SearchBudget {
    std::uint64_t max_nodes = 5'000'000;
    bool exhaustive = false;  // ignore max_nodes; guarantees a definitive answer
};

enum class SearchOutcome { Found, Nonexistent, BudgetExceeded };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::BudgetExceeded;
    std::optional<WeighingMatrix> matrix;
    std::uint64_t nodes = 0;
};

/// Backtracking search for a member of W(n,k,a), canonical under the fixed
/// normalization: first row is (a-k zeros, then k entries of exponent 0),
/// every row's first nonzero has exponent 0, and rows 2..a are strictly
/// increasing in the token order zero < exp 0 < exp 1 < ... The first matrix
/// reached by depth-first search over that normal form is returned, so the
/// result is deterministic. Exhausting the tree proves nonexistence.
SearchResult search(int n, int k, int a, const SearchBudget& budget = {});

}  // namespace suebk
