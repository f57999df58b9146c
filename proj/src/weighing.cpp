#include "suebk/weighing.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace suebk {

WeighingMatrix::WeighingMatrix(std::string name, int order, int weight, int root_order,
                               std::vector<int> entries)
    : name_(std::move(name)),
      order_(order),
      weight_(weight),
      root_order_(root_order),
      entries_(std::move(entries)) {
    if (order_ < 1) throw std::domain_error("WeighingMatrix: order must be >= 1");
    if (root_order_ < 1) throw std::domain_error("WeighingMatrix: root order must be >= 1");
    if (entries_.size() != static_cast<size_t>(order_) * order_)
        throw std::domain_error("WeighingMatrix: non-square entry grid");
    for (int& e : entries_) {
        if (e == ZERO_ENTRY) continue;
        e = ((e % root_order_) + root_order_) % root_order_;
    }
}

std::vector<Cplx> WeighingMatrix::row_values(int x) const {
    if (x < 1 || x > order_)
        throw std::domain_error("row_values: row index " + std::to_string(x) + " outside [1," +
                                std::to_string(order_) + "]");
    std::vector<Cplx> v(static_cast<size_t>(order_));
    for (int c = 0; c < order_; ++c)
        v[static_cast<size_t>(c)] =
            is_zero(x - 1, c) ? Cplx{0.0, 0.0} : root_of_unity(ent(x - 1, c), root_order_);
    return v;
}

ComplexMatrix WeighingMatrix::to_complex() const {
    ComplexMatrix m(order_, order_);
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            if (!is_zero(r, c)) m.at(r, c) = root_of_unity(ent(r, c), root_order_);
    return m;
}

Cplx root_of_unity(int t, int n) {
    const double arg = 2.0 * std::numbers::pi * t / n;
    return {std::cos(arg), std::sin(arg)};
}

WeighingMatrix fourier_matrix(int d) {
    if (d < 2) throw std::domain_error("fourier_matrix: d must be >= 2");
    std::vector<int> e(static_cast<size_t>(d) * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) e[static_cast<size_t>(x) * d + y] = (x * y) % d;
    return WeighingMatrix("CH" + std::to_string(d), d, d, d, std::move(e));
}

WeighingMatrix o4() {
    constexpr int Z = WeighingMatrix::ZERO_ENTRY;
    return WeighingMatrix("O4", 4, 3, 2,
                          {Z, 0, 0, 0,   //
                           0, Z, 1, 0,   //
                           0, 0, Z, 1,   //
                           0, 1, 0, Z});
}

WeighingMatrix o5() {
    constexpr int Z = WeighingMatrix::ZERO_ENTRY;
    return WeighingMatrix("O5", 5, 4, 3,
                          {0, 0, 0, 0, Z,   //
                           0, 1, 2, Z, 0,   //
                           0, 2, Z, 1, 2,   //
                           0, Z, 1, 2, 1,   //
                           Z, 0, 2, 1, 1});
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

bool uniform_line_counts(const WeighingMatrix& a, int& k, std::string& reason) {
    const int n = a.order();
    k = 0;
    for (int c = 0; c < n; ++c)
        if (!a.is_zero(0, c)) ++k;
    for (int r = 0; r < n; ++r) {
        int cnt = 0;
        for (int c = 0; c < n; ++c)
            if (!a.is_zero(r, c)) ++cnt;
        if (cnt != k) {
            reason = "row " + std::to_string(r + 1) + " has " + std::to_string(cnt) +
                     " nonzeros, expected " + std::to_string(k);
            return false;
        }
    }
    for (int c = 0; c < n; ++c) {
        int cnt = 0;
        for (int r = 0; r < n; ++r)
            if (!a.is_zero(r, c)) ++cnt;
        if (cnt != k) {
            reason = "column " + std::to_string(c + 1) + " has " + std::to_string(cnt) +
                     " nonzeros, expected " + std::to_string(k);
            return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport validate(const WeighingMatrix& a, const Tolerance& tol) {
    ValidationReport rep;
    if (!uniform_line_counts(a, rep.weight, rep.reason)) return rep;
    if (rep.weight == 0) {
        rep.reason = "all-zero matrix";
        return rep;
    }
    const ComplexMatrix m = a.to_complex();
    const ComplexMatrix gram_rows = matmul(m, adjoint(m));
    const ComplexMatrix gram_cols = matmul(adjoint(m), m);
    const double k = rep.weight;
    double dev = 0.0;
    for (int r = 0; r < a.order(); ++r)
        for (int c = 0; c < a.order(); ++c) {
            const Cplx target = (r == c) ? Cplx{k, 0.0} : Cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(gram_rows.at(r, c) - target));
            dev = std::max(dev, std::abs(gram_cols.at(r, c) - target));
        }
    rep.max_deviation = dev;
    rep.valid = dev <= tol.eps * k;
    if (!rep.valid) rep.reason = "gram deviation " + std::to_string(dev);
    return rep;
}

namespace {

// zeta_n^e written as p + q*zeta_n over the integers, for n in {1,2,3,4,6}.
// The basis element satisfies zeta^2 = -zeta-1 (n=3), -1 (n=4), zeta-1 (n=6),
// and is rational for n in {1,2}; in every case (1, zeta) is Z-independent,
// so a sum vanishes iff both components do.
struct ExactPair {
    long long p = 0;
    long long q = 0;
};

bool exact_pair_for(int e, int n, ExactPair& out) {
    switch (n) {
        case 1:
            out = {1, 0};
            return true;
        case 2:
            out = (e == 0) ? ExactPair{1, 0} : ExactPair{-1, 0};
            return true;
        case 3:
            switch (e) {
                case 0: out = {1, 0}; return true;
                case 1: out = {0, 1}; return true;
                case 2: out = {-1, -1}; return true;
            }
            return false;
        case 4:
            switch (e) {
                case 0: out = {1, 0}; return true;
                case 1: out = {0, 1}; return true;
                case 2: out = {-1, 0}; return true;
                case 3: out = {0, -1}; return true;
            }
            return false;
        case 6:
            switch (e) {
                case 0: out = {1, 0}; return true;
                case 1: out = {0, 1}; return true;
                case 2: out = {-1, 1}; return true;
                case 3: out = {-1, 0}; return true;
                case 4: out = {0, -1}; return true;
                case 5: out = {1, -1}; return true;
            }
            return false;
        default:
            return false;
    }
}

bool exact_root_sum_zero(const std::vector<int>& exponents, int n) {
    ExactPair sum;
    for (int e : exponents) {
        ExactPair term;
        if (!exact_pair_for(e, n, term)) throw std::logic_error("unsupported root order");
        sum.p += term.p;
        sum.q += term.q;
    }
    return sum.p == 0 && sum.q == 0;
}

}  // namespace

std::optional<bool> validate_exact(const WeighingMatrix& a) {
    const int n = a.root_order();
    if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6) return std::nullopt;
    int k = 0;
    std::string reason;
    if (!uniform_line_counts(a, k, reason) || k == 0) return false;
    const int ord = a.order();
    std::vector<int> diffs;
    for (int x = 0; x < ord; ++x)
        for (int y = x + 1; y < ord; ++y) {
            diffs.clear();
            for (int c = 0; c < ord; ++c)
                if (!a.is_zero(x, c) && !a.is_zero(y, c))
                    diffs.push_back(((a.ent(x, c) - a.ent(y, c)) % n + n) % n);
            if (!diffs.empty() && !exact_root_sum_zero(diffs, n)) return false;
            diffs.clear();
            for (int r = 0; r < ord; ++r)
                if (!a.is_zero(r, x) && !a.is_zero(r, y))
                    diffs.push_back(((a.ent(r, x) - a.ent(r, y)) % n + n) % n);
            if (!diffs.empty() && !exact_root_sum_zero(diffs, n)) return false;
        }
    return true;
}

std::vector<Cplx> scaled_row(const WeighingMatrix& a, int x) {
    auto v = a.row_values(x);
    const double scale = 1.0 / std::sqrt(static_cast<double>(a.weight()));
    for (Cplx& z : v) z *= scale;
    return v;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

Catalog::Catalog() : builtins_{o4(), o5()} {}

std::optional<WeighingMatrix> Catalog::lookup(int k, int a) const {
    if (a == k && k >= 2) return fourier_matrix(k);
    for (const auto& w : builtins_)
        if (w.weight() == k && w.order() == a) return w;
    for (const auto& [key, w] : stored_)
        if (std::get<1>(key) == k && std::get<2>(key) == a) return w;
    return std::nullopt;
}

std::optional<WeighingMatrix> Catalog::lookup_exact(int n, int k, int a) const {
    if (n == k && k == a && k >= 2) return fourier_matrix(k);
    for (const auto& w : builtins_)
        if (w.root_order() == n && w.weight() == k && w.order() == a) return w;
    auto it = stored_.find({n, k, a});
    if (it != stored_.end()) return it->second;
    return std::nullopt;
}

void Catalog::add(const WeighingMatrix& w) {
    stored_[{w.root_order(), w.weight(), w.order()}] = w;
}

std::vector<WeighingMatrix> Catalog::list() const {
    std::vector<WeighingMatrix> out = builtins_;
    for (const auto& [key, w] : stored_) out.push_back(w);
    return out;
}

void Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog: cannot open " + path);
    for (const auto& w : read_catalog(in)) {
        const auto rep = validate(w);
        if (!rep.valid)
            throw std::runtime_error("catalog: invalid record " + w.name() + " in " + path +
                                     ": " + rep.reason);
        if (rep.weight != w.weight())
            throw std::runtime_error("catalog: record " + w.name() + " declares weight " +
                                     std::to_string(w.weight()) + " but has " +
                                     std::to_string(rep.weight));
        add(w);
    }
}

void Catalog::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("catalog: cannot write " + path);
    std::vector<WeighingMatrix> ws;
    for (const auto& [key, w] : stored_) ws.push_back(w);
    write_catalog(out, ws);
}

std::vector<WeighingMatrix> read_catalog(std::istream& in) {
    std::vector<WeighingMatrix> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream head(line);
        int n = 0, k = 0, a = 0;
        if (!(head >> n >> k >> a))
            throw std::runtime_error("catalog: malformed record header '" + line + "'");
        if (n < 1 || a < 1) throw std::runtime_error("catalog: bad parameters in '" + line + "'");
        std::vector<int> entries;
        entries.reserve(static_cast<size_t>(a) * a);
        for (int r = 0; r < a; ++r) {
            if (!std::getline(in, line))
                throw std::runtime_error("catalog: truncated record, expected " +
                                         std::to_string(a) + " rows");
            std::istringstream row(line);
            std::string tok;
            int got = 0;
            while (row >> tok) {
                if (tok == ".") {
                    entries.push_back(WeighingMatrix::ZERO_ENTRY);
                } else {
                    size_t used = 0;
                    int e = std::stoi(tok, &used);
                    if (used != tok.size() || e < 0 || e >= n)
                        throw std::runtime_error("catalog: bad token '" + tok + "'");
                    entries.push_back(e);
                }
                ++got;
            }
            if (got != a)
                throw std::runtime_error("catalog: row has " + std::to_string(got) +
                                         " tokens, expected " + std::to_string(a));
        }
        std::string name = "W(" + std::to_string(n) + "," + std::to_string(k) + "," +
                           std::to_string(a) + ")";
        out.emplace_back(std::move(name), a, k, n, std::move(entries));
    }
    return out;
}

void write_catalog(std::ostream& out, const std::vector<WeighingMatrix>& ws) {
    for (const auto& w : ws) {
        out << w.root_order() << ' ' << w.weight() << ' ' << w.order() << '\n';
        for (int r = 0; r < w.order(); ++r) {
            for (int c = 0; c < w.order(); ++c) {
                if (c) out << ' ';
                if (w.is_zero(r, c))
                    out << '.';
                else
                    out << w.ent(r, c);
            }
            out << '\n';
        }
        out << '\n';
    }
}

}  // namespace suebk
