#include "suebk/coord.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace suebk {

std::string to_string(const Coord& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

namespace {

// Stripe order on a grid with d rows and dp columns, d <= dp.
int base_index(int d, int dp, int i, int j) {
    return (i <= j) ? (j - i) * d + i : (dp + j - i) * d + i;
}

// Closed-form inverse of base_index.
Coord base_inverse(int d, int dp, int pos) {
    const int i = (pos - 1) % d + 1;
    const int stripe = (pos - 1) / d;
    const int j = (stripe <= dp - i) ? i + stripe : i + stripe - dp;
    return {i, j};
}

}  // namespace

OrderedGrid::OrderedGrid(int rows, int cols) : rows_(rows), cols_(cols), transposed_(rows > cols) {
    if (rows < 2 || cols < 2)
        throw std::domain_error("OrderedGrid: both dimensions must be >= 2, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
}

int OrderedGrid::order_index(const Coord& c) const {
    if (!contains(c))
        throw std::domain_error("order_index: coordinate " + to_string(c) + " outside " +
                                std::to_string(rows_) + "x" + std::to_string(cols_) + " grid");
    return transposed_ ? base_index(cols_, rows_, c.col, c.row)
                       : base_index(rows_, cols_, c.row, c.col);
}

Coord OrderedGrid::order_inverse(int pos) const {
    if (pos < 1 || pos > size())
        throw std::domain_error("order_inverse: position " + std::to_string(pos) +
                                " outside [1," + std::to_string(size()) + "]");
    if (transposed_) {
        const Coord t = base_inverse(cols_, rows_, pos);
        return {t.col, t.row};
    }
    return base_inverse(rows_, cols_, pos);
}

std::vector<Coord> OrderedGrid::full_order() const {
    std::vector<Coord> out;
    out.reserve(size());
    for (int p = 1; p <= size(); ++p) out.push_back(order_inverse(p));
    return out;
}

int CoordBlock::rank_of(const Coord& c) const {
    for (int r = 0; r < size(); ++r)
        if (coords[r] == c) return r + 1;
    throw std::domain_error("rank_of: coordinate " + to_string(c) + " not in block");
}

CoordBlock inherited_order(const OrderedGrid& grid, const std::vector<Coord>& coords) {
    if (coords.empty()) throw std::domain_error("inherited_order: empty coordinate set");
    std::vector<std::pair<int, Coord>> keyed;
    keyed.reserve(coords.size());
    for (const Coord& c : coords) keyed.emplace_back(grid.order_index(c), c);
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw std::domain_error("inherited_order: duplicate coordinate " +
                                    to_string(keyed[i].second));
    CoordBlock block;
    block.coords.reserve(keyed.size());
    for (const auto& [idx, c] : keyed) block.coords.push_back(c);
    return block;
}

bool window_distinct(const std::vector<Coord>& ordered, int w) {
    if (w < 1) throw std::domain_error("window_distinct: window size must be >= 1");
    const int n = static_cast<int>(ordered.size());
    for (int start = 0; start + w <= n; ++start) {
        for (int i = start; i < start + w; ++i) {
            for (int j = i + 1; j < start + w; ++j) {
                if (ordered[i].row == ordered[j].row || ordered[i].col == ordered[j].col)
                    return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::string> cell_labels(const OrderedGrid& grid, const std::vector<Coord>& deleted) {
    std::set<Coord> del(deleted.begin(), deleted.end());
    for (const Coord& c : del)
        if (!grid.contains(c))
            throw std::domain_error("diagram: deleted coordinate " + to_string(c) +
                                    " outside grid");
    std::vector<std::string> labels(static_cast<size_t>(grid.size()));
    for (int i = 1; i <= grid.rows(); ++i) {
        for (int j = 1; j <= grid.cols(); ++j) {
            const Coord c{i, j};
            const size_t slot = static_cast<size_t>((i - 1) * grid.cols() + (j - 1));
            labels[slot] = del.count(c) ? std::string("·")
                                        : std::to_string(grid.order_index(c));
        }
    }
    return labels;
}

}  // namespace

std::string render_order_csv(const OrderedGrid& grid, const std::vector<Coord>& deleted) {
    const auto labels = cell_labels(grid, deleted);
    std::ostringstream out;
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.cols(); ++j) {
            if (j) out << ',';
            out << labels[static_cast<size_t>(i * grid.cols() + j)];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_order_ascii(const OrderedGrid& grid, const std::vector<Coord>& deleted) {
    const auto labels = cell_labels(grid, deleted);
    const int width = static_cast<int>(std::to_string(grid.size()).size());
    std::ostringstream out;
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.cols(); ++j) {
            const std::string& s = labels[static_cast<size_t>(i * grid.cols() + j)];
            // The UTF-8 dot is one display column wide.
            const int shown = (s == "·") ? 1 : static_cast<int>(s.size());
            if (j) out << ' ';
            out << std::string(static_cast<size_t>(width - shown), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace suebk
