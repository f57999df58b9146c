#pragma once

#include <compare>
#include <string>
#include <vector>

namespace suebk {

/// 1-based cell of a rectangular grid. (1,1) is the top-left corner.
struct Coord {
    int row = 1;
    int col = 1;

    auto operator<=>(const Coord&) const = default;
};

std::string to_string(const Coord& c);

/// Rectangular coordinate grid carrying the canonical diagonal-stripe order.
///
/// For rows <= cols the order index of (i,j) is
///     (j-i)*rows + i      if i <= j,
///     (cols+j-i)*rows + i if i > j,
/// a bijection onto [1, rows*cols]. Grids with rows > cols delegate to the
/// transposed grid, so the same stripe pattern applies with the roles of rows
/// and columns swapped.
///
/// Two distinct cells sharing a row or a column always sit at order distance
/// >= min(rows, cols) - 1, which makes short windows of consecutive cells
/// row- and column-distinct.
class OrderedGrid {
public:
    OrderedGrid(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }

    /// True when the canonical order is evaluated on the transposed grid
    /// (rows > cols).
    bool transposed_order() const { return transposed_; }

    bool contains(const Coord& c) const {
        return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_;
    }

    /// Position of c in the total order, in [1, rows*cols].
    int order_index(const Coord& c) const;

    /// Inverse of order_index, by closed-form arithmetic.
    Coord order_inverse(int pos) const;

    /// All cells listed in order (position p holds order_inverse(p)).
    std::vector<Coord> full_order() const;

private:
    int rows_;
    int cols_;
    bool transposed_;
};

/// A nonempty coordinate set carrying the order inherited from its grid:
/// coords[r-1] is the cell of rank r.
struct CoordBlock {
    std::vector<Coord> coords;

    int size() const { return static_cast<int>(coords.size()); }

    /// 1-based inherited rank of c; throws std::domain_error if absent.
    int rank_of(const Coord& c) const;
};

/// Order-preserving relabeling of a coordinate subset to ranks [1, #coords].
CoordBlock inherited_order(const OrderedGrid& grid, const std::vector<Coord>& coords);

/// True iff every window of w consecutive cells is pairwise distinct in both
/// row and column.
bool window_distinct(const std::vector<Coord>& ordered, int w);

/// Grid diagrams: each cell shows its order index, deleted cells show a dot.
std::string render_order_csv(const OrderedGrid& grid, const std::vector<Coord>& deleted = {});
std::string render_order_ascii(const OrderedGrid& grid, const std::vector<Coord>& deleted = {});

}  // namespace suebk
