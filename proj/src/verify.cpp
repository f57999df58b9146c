#include "suebk/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace suebk {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unextendible: return "Unextendible";
        case Verdict::Extendible: return "Extendible";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

OrthonormalityCheck check_orthonormal(const std::vector<ComplexMatrix>& states,
                                      const Tolerance& tol) {
    if (states.empty()) throw std::domain_error("check_orthonormal: empty state set");
    for (const auto& m : states)
        if (m.rows() != states[0].rows() || m.cols() != states[0].cols())
            throw std::domain_error("check_orthonormal: mixed shapes in state set");
    double dev = 0.0;
    for (size_t i = 0; i < states.size(); ++i)
        for (size_t j = i; j < states.size(); ++j) {
            const Cplx g = hs_inner(states[i], states[j]);
            const Cplx target = (i == j) ? Cplx{1.0, 0.0} : Cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(g - target));
        }
    return {dev, dev <= tol.eps};
}

std::vector<int> check_sesk_all(const std::vector<ComplexMatrix>& states, int k,
                                const Tolerance& tol) {
    std::vector<int> failures;
    for (size_t i = 0; i < states.size(); ++i)
        if (!is_sesk(states[i], k, tol)) failures.push_back(static_cast<int>(i));
    return failures;
}

// ---------------------------------------------------------------------------
// Bipartite matching
// ---------------------------------------------------------------------------

namespace {

struct BipartiteGraph {
    std::vector<int> rows, cols;              // sorted distinct labels
    std::vector<std::vector<int>> adj;        // row slot -> col slots
};

BipartiteGraph graph_of(const std::vector<Coord>& coords) {
    BipartiteGraph g;
    for (const Coord& c : coords) {
        g.rows.push_back(c.row);
        g.cols.push_back(c.col);
    }
    auto dedup = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(g.rows);
    dedup(g.cols);
    g.adj.assign(g.rows.size(), {});
    auto slot = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::vector<Coord> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Coord& c : sorted)
        g.adj[static_cast<size_t>(slot(g.rows, c.row))].push_back(slot(g.cols, c.col));
    return g;
}

bool augment(const BipartiteGraph& g, int r, std::vector<int>& match_col,
             std::vector<char>& visited) {
    for (int c : g.adj[static_cast<size_t>(r)]) {
        if (visited[static_cast<size_t>(c)]) continue;
        visited[static_cast<size_t>(c)] = 1;
        if (match_col[static_cast<size_t>(c)] < 0 ||
            augment(g, match_col[static_cast<size_t>(c)], match_col, visited)) {
            match_col[static_cast<size_t>(c)] = r;
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingResult max_matching(const std::vector<Coord>& coords) {
    MatchingResult res;
    if (coords.empty()) return res;
    const BipartiteGraph g = graph_of(coords);
    const int nr = static_cast<int>(g.rows.size());
    const int nc = static_cast<int>(g.cols.size());
    std::vector<int> match_col(static_cast<size_t>(nc), -1);
    for (int r = 0; r < nr; ++r) {
        std::vector<char> visited(static_cast<size_t>(nc), 0);
        if (augment(g, r, match_col, visited)) ++res.size;
    }
    std::vector<int> match_row(static_cast<size_t>(nr), -1);
    for (int c = 0; c < nc; ++c)
        if (match_col[static_cast<size_t>(c)] >= 0)
            match_row[static_cast<size_t>(match_col[static_cast<size_t>(c)])] = c;
    for (int c = 0; c < nc; ++c)
        if (match_col[static_cast<size_t>(c)] >= 0)
            res.matched.push_back({g.rows[static_cast<size_t>(match_col[static_cast<size_t>(c)])],
                                   g.cols[static_cast<size_t>(c)]});
    std::sort(res.matched.begin(), res.matched.end());

    // Koenig cover: alternate from unmatched rows; the cover is the
    // unreached rows plus the reached columns.
    std::vector<char> row_seen(static_cast<size_t>(nr), 0), col_seen(static_cast<size_t>(nc), 0);
    std::vector<int> stack;
    for (int r = 0; r < nr; ++r)
        if (match_row[static_cast<size_t>(r)] < 0) {
            row_seen[static_cast<size_t>(r)] = 1;
            stack.push_back(r);
        }
    while (!stack.empty()) {
        const int r = stack.back();
        stack.pop_back();
        for (int c : g.adj[static_cast<size_t>(r)]) {
            if (col_seen[static_cast<size_t>(c)]) continue;
            col_seen[static_cast<size_t>(c)] = 1;
            const int r2 = match_col[static_cast<size_t>(c)];
            if (r2 >= 0 && !row_seen[static_cast<size_t>(r2)]) {
                row_seen[static_cast<size_t>(r2)] = 1;
                stack.push_back(r2);
            }
        }
    }
    for (int r = 0; r < nr; ++r)
        if (!row_seen[static_cast<size_t>(r)]) res.cover_rows.push_back(g.rows[static_cast<size_t>(r)]);
    for (int c = 0; c < nc; ++c)
        if (col_seen[static_cast<size_t>(c)]) res.cover_cols.push_back(g.cols[static_cast<size_t>(c)]);
    return res;
}

// ---------------------------------------------------------------------------
// Complement analysis
// ---------------------------------------------------------------------------

namespace {

// Orthonormal basis of span{states} by modified Gram-Schmidt; reports how far
// the input was from already being orthonormal (max |1 - residual norm|).
Eigen::MatrixXcd orthonormal_span(int dim, const std::vector<ComplexMatrix>& states,
                                  double* deviation) {
    Eigen::MatrixXcd q(dim, static_cast<int>(states.size()));
    int rank = 0;
    double dev = 0.0;
    for (const auto& m : states) {
        Eigen::VectorXcd v(dim);
        for (int i = 0; i < dim; ++i) v(i) = m.entries()[static_cast<size_t>(i)];
        for (int j = 0; j < rank; ++j) v -= q.col(j) * (q.col(j).adjoint() * v)(0);
        const double nrm = v.norm();
        dev = std::max(dev, std::abs(1.0 - nrm));
        if (nrm > 1e-9) q.col(rank++) = v / nrm;
    }
    *deviation = dev;
    return q.leftCols(rank);
}

}  // namespace

ComplementAnalysis complement_support(int d, int dprime,
                                      const std::vector<ComplexMatrix>& states,
                                      const Tolerance& tol) {
    if (states.empty()) throw std::domain_error("complement_support: empty state set");
    const int dim = d * dprime;
    for (const auto& m : states)
        if (m.rows() != d || m.cols() != dprime)
            throw std::domain_error("complement_support: state shape mismatch");

    ComplementAnalysis out;
    Eigen::MatrixXcd q = orthonormal_span(dim, states, &out.reorth_deviation);
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim) - q * q.adjoint();
    out.dimension = dim - static_cast<int>(q.cols());

    bool diag_ok = true;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const double mag = std::abs(proj(r, c));
            if (r == c) {
                if (mag > tol.eps && std::abs(mag - 1.0) > tol.eps) diag_ok = false;
            } else {
                out.offdiag_max = std::max(out.offdiag_max, mag);
            }
        }

    out.coordinate_supported = diag_ok && out.offdiag_max <= tol.eps;
    if (out.coordinate_supported) {
        for (int slot = 0; slot < dim; ++slot)
            if (std::abs(proj(slot, slot)) > 0.5)
                out.support.push_back({slot / dprime + 1, slot % dprime + 1});
        out.matching = max_matching(out.support);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full certification
// ---------------------------------------------------------------------------

VerificationReport check_unextendible(int d, int dprime,
                                      const std::vector<ComplexMatrix>& states, int k,
                                      const Tolerance& tol) {
    VerificationReport rep;
    rep.eps = tol.eps;
    const auto ortho = check_orthonormal(states, tol);
    rep.ortho_max_dev = ortho.max_deviation;
    rep.ortho_pass = ortho.pass;
    rep.sesk_failures = check_sesk_all(states, k, tol);
    rep.complement = complement_support(d, dprime, states, tol);

    auto attach_witness = [&](ComplexMatrix w, const std::string& how) {
        // Soundness gate: the witness must itself be an SESk orthogonal to
        // every input state.
        if (!is_sesk(w, k, tol))
            throw std::runtime_error("witness construction produced a non-SESk state");
        for (const auto& m : states)
            if (std::abs(hs_inner(m, w)) > tol.eps)
                throw std::runtime_error("witness is not orthogonal to the input set");
        rep.witness = std::move(w);
        rep.verdict = Verdict::Extendible;
        rep.notes.push_back("extendible: " + how);
    };

    if (rep.complement.coordinate_supported) {
        const MatchingResult& match = *rep.complement.matching;
        if (match.size >= k) {
            ComplexMatrix w(d, dprime);
            const double amp = 1.0 / std::sqrt(static_cast<double>(k));
            for (int i = 0; i < k; ++i) w.at(match.matched[static_cast<size_t>(i)]) = amp;
            attach_witness(std::move(w), "complement matching has size " +
                                             std::to_string(match.size) + " >= k");
        } else if (ortho.pass && rep.sesk_failures.empty()) {
            rep.verdict = Verdict::Unextendible;
        } else {
            rep.verdict = Verdict::Undecided;
            rep.notes.push_back(
                "orthonormality or SESk checks failed; the complement carries no SESk "
                "(matching < k) but the set is not a valid basis");
        }
        return rep;
    }

    // Not coordinate-supported: probe an orthonormal basis of the
    // orthocomplement; any SESk hit settles extendibility.
    double dev = 0.0;
    Eigen::MatrixXcd q = orthonormal_span(d * dprime, states, &dev);
    Eigen::MatrixXcd proj =
        Eigen::MatrixXcd::Identity(d * dprime, d * dprime) - q * q.adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj, Eigen::ComputeThinU);
    for (int j = 0; j < svd.singularValues().size(); ++j) {
        if (svd.singularValues()(j) < 0.5) continue;
        ComplexMatrix cand(d, dprime);
        for (int i = 0; i < d * dprime; ++i)
            cand.entries()[static_cast<size_t>(i)] = svd.matrixU()(i, j);
        if (is_sesk(cand, k, tol)) {
            attach_witness(std::move(cand), "an orthocomplement basis vector is an SESk");
            return rep;
        }
    }
    rep.verdict = Verdict::Undecided;
    rep.notes.push_back(
        "complement is not coordinate-supported; SESk-freeness of a general subspace is "
        "not decided here");
    return rep;
}

}  // namespace suebk
