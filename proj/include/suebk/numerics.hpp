#pragma once

#include <complex>
#include <vector>

#include "suebk/coord.hpp"

namespace suebk {

using Cplx = std::complex<double>;

/// Absolute tolerance on unit-scale quantities (singular values, inner
/// products, projector entries).
struct Tolerance {
    double eps = 1e-9;
};

/// Dense complex matrix, row-major. Entry access is 0-based; the 1-based
/// paper-style cell (i,j) is reached through Coord overloads.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Cplx{0.0, 0.0}) {}

    static ComplexMatrix elementary(int rows, int cols, const Coord& c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Cplx& at(const Coord& c) { return at(c.row - 1, c.col - 1); }
    const Cplx& at(const Coord& c) const { return at(c.row - 1, c.col - 1); }

    const std::vector<Cplx>& entries() const { return a_; }
    std::vector<Cplx>& entries() { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cplx> a_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Pure bipartite state on C^d (x) C^d'. Amplitude of |i>_A |j>_B sits at
/// slot (i-1)*dprime + (j-1), i.e. the row-major flattening of its matrix.
struct BipartiteState {
    int d = 0;
    int dprime = 0;
    std::vector<Cplx> amplitudes;
};

/// Hilbert-Schmidt inner product Tr(M^dag N), conjugate-linear in the first
/// argument.
Cplx hs_inner(const ComplexMatrix& m, const ComplexMatrix& n);

/// Full singular spectrum, descending, length min(rows, cols).
std::vector<double> singular_values(const ComplexMatrix& m);

/// Number of singular values above tol.eps.
int schmidt_rank(const ComplexMatrix& m, const Tolerance& tol = {});

/// True iff the matrix has exactly k singular values above tol.eps and each
/// of them is within tol.eps of 1/sqrt(k).
bool is_sesk(const ComplexMatrix& m, int k, const Tolerance& tol = {});

BipartiteState matrix_to_state(const ComplexMatrix& m);
ComplexMatrix state_to_matrix(const BipartiteState& s);

}  // namespace suebk
