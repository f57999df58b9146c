#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suebk/coord.hpp"
#include "suebk/numerics.hpp"

namespace suebk {

// Certification works on the bare list of state matrices so that it stays
// independent of how (or whether) a construction produced them.

struct OrthonormalityCheck {
    double max_deviation = 0.0;  // max over pairs of |<M_i,M_j> - delta_ij|
    bool pass = false;
};

/// Max deviation of the Gram matrix from the identity, over all pairs.
OrthonormalityCheck check_orthonormal(const std::vector<ComplexMatrix>& states,
                                      const Tolerance& tol = {});

/// 0-based indices of states that are not SESk.
std::vector<int> check_sesk_all(const std::vector<ComplexMatrix>& states, int k,
                                const Tolerance& tol = {});

/// Row-column matching data for a coordinate set, with the matched cells and
/// a minimum line cover (Koenig construction) as certificates.
struct MatchingResult {
    int size = 0;
    std::vector<Coord> matched;    // one cell per matched row-column pair
    std::vector<int> cover_rows;   // 1-based rows of a minimum line cover
    std::vector<int> cover_cols;   // 1-based columns
};

/// Maximum matching of T viewed as a bipartite row-column graph, by
/// augmenting paths. This equals the largest rank reachable in
/// span{E_[i,j] : (i,j) in T}.
MatchingResult max_matching(const std::vector<Coord>& coords);

/// Structure of the orthocomplement of span{states} inside the full matrix
/// space, computed from the projector in the elementary-matrix basis.
struct ComplementAnalysis {
    int dimension = 0;             // dim of the orthocomplement (= dd' - rank)
    bool coordinate_supported = false;
    std::vector<Coord> support;    // T, when coordinate-supported
    std::optional<MatchingResult> matching;  // when coordinate-supported
    double offdiag_max = 0.0;      // largest off-diagonal projector entry
    double reorth_deviation = 0.0; // how far the input was from orthonormal
};

ComplementAnalysis complement_support(int d, int dprime,
                                      const std::vector<ComplexMatrix>& states,
                                      const Tolerance& tol = {});

enum class Verdict { Unextendible, Extendible, Undecided };

std::string to_string(Verdict v);

struct VerificationReport {
    double ortho_max_dev = 0.0;
    bool ortho_pass = false;
    std::vector<int> sesk_failures;
    ComplementAnalysis complement;
    Verdict verdict = Verdict::Undecided;
    std::optional<ComplexMatrix> witness;  // an SESk orthogonal to every state
    double eps = 0.0;
    std::vector<std::string> notes;
};

/// Runs every check. Unextendible needs orthonormality, all-SESk, a
/// coordinate-supported complement and matching < k; a matching of size >= k
/// yields an explicit SESk witness and the verdict Extendible. A complement
/// that is not coordinate-supported gives Undecided unless one of its basis
/// vectors happens to be an SESk itself.
VerificationReport check_unextendible(int d, int dprime,
                                      const std::vector<ComplexMatrix>& states, int k,
                                      const Tolerance& tol = {});

}  // namespace suebk
