#include "suebk/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace suebk {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) e(r, c) = m.at(r, c);
    return e;
}

}  // namespace

ComplexMatrix ComplexMatrix::elementary(int rows, int cols, const Coord& c) {
    if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols)
        throw std::domain_error("elementary: coordinate " + to_string(c) + " outside " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    ComplexMatrix m(rows, cols);
    m.at(c) = Cplx{1.0, 0.0};
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::domain_error("matmul: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            const Cplx ark = a.at(r, k);
            if (ark == Cplx{}) continue;
            for (int c = 0; c < b.cols(); ++c) out.at(r, c) += ark * b.at(k, c);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

Cplx hs_inner(const ComplexMatrix& m, const ComplexMatrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw std::domain_error("hs_inner: shape mismatch " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " vs " + std::to_string(n.rows()) +
                                "x" + std::to_string(n.cols()));
    Cplx sum{0.0, 0.0};
    const auto& me = m.entries();
    const auto& ne = n.entries();
    for (size_t i = 0; i < me.size(); ++i) sum += std::conj(me[i]) * ne[i];
    return sum;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int schmidt_rank(const ComplexMatrix& m, const Tolerance& tol) {
    int rank = 0;
    for (double s : singular_values(m))
        if (s > tol.eps) ++rank;
    return rank;
}

bool is_sesk(const ComplexMatrix& m, int k, const Tolerance& tol) {
    const int dmin = std::min(m.rows(), m.cols());
    if (k < 2 || k > dmin)
        throw std::domain_error("is_sesk: k=" + std::to_string(k) + " outside [2," +
                                std::to_string(dmin) + "]");
    const auto sv = singular_values(m);
    const double target = 1.0 / std::sqrt(static_cast<double>(k));
    for (size_t i = 0; i < sv.size(); ++i) {
        if (static_cast<int>(i) < k) {
            if (std::abs(sv[i] - target) > tol.eps) return false;
        } else if (sv[i] > tol.eps) {
            return false;
        }
    }
    return true;
}

BipartiteState matrix_to_state(const ComplexMatrix& m) {
    return BipartiteState{m.rows(), m.cols(), m.entries()};
}

ComplexMatrix state_to_matrix(const BipartiteState& s) {
    if (static_cast<size_t>(s.d) * s.dprime != s.amplitudes.size())
        throw std::domain_error("state_to_matrix: amplitude count " +
                                std::to_string(s.amplitudes.size()) + " != d*d' = " +
                                std::to_string(s.d * s.dprime));
    ComplexMatrix m(s.d, s.dprime);
    m.entries() = s.amplitudes;
    return m;
}

}  // namespace suebk
