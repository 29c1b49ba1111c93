#include "mubtk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace mubtk {

namespace {

void check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("Matrix: dim must be positive, got " + std::to_string(dim));
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Matrix::Matrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0}) {
    check_dim(dim);
}

Matrix::Matrix(int dim, std::vector<Complex> entries) : dim_(dim), e_(std::move(entries)) {
    check_dim(dim);
    if (e_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("Matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(e_.size()));
    for (const auto& z : e_)
        if (!finite(z)) throw std::invalid_argument("Matrix: non-finite entry");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    const int n = a.dim();
    Matrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix adjoint(const Matrix& a) {
    const int n = a.dim();
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

double unitary_deviation(const Matrix& a) {
    const Matrix g = matmul(adjoint(a), a);
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex want = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            worst = std::max(worst, std::abs(g(i, j) - want));
        }
    return worst;
}

bool is_unitary(const Matrix& a, const Tolerance& tol) { return unitary_deviation(a) <= tol.unitary_tol; }

bool is_scaled_hadamard(const Matrix& a, const Tolerance& tol) {
    if (!is_unitary(a, tol)) return false;
    const double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
    for (const auto& z : a.entries())
        if (std::abs(std::abs(z) - target) > tol.hadamard_tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi for Hermitian matrices.
//
// Pivot (p,q) is annihilated by the unitary rotation
//   J[p][p] = c,  J[p][q] = s e^{i phi},  J[q][p] = -s e^{-i phi},  J[q][q] = c
// where e^{i phi} is the phase of A[p][q] and (c, s) is the classical real
// Jacobi rotation for [[a_pp, |a_pq|], [|a_pq|, a_qq]]. Sweeps run in a fixed
// row-major pivot order, so the computation is deterministic.
// ---------------------------------------------------------------------------

EigenSystem hermitian_eig(const Matrix& a, const Tolerance& tol) {
    (void)tol;  // exposed for interface symmetry; Jacobi converges well below eig_tol
    const int n = a.dim();
    constexpr double kHermTol = 1e-10;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > kHermTol)
                throw std::invalid_argument("hermitian_eig: input is not Hermitian");

    // Work on the symmetrized copy; imaginary parts on the diagonal are noise.
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    Matrix vec = Matrix::identity(n);

    double frob = 0.0;
    for (const auto& z : m.entries()) frob += std::norm(z);
    frob = std::sqrt(frob);
    const double stop = 1e-14 * std::max(frob, 1e-300);

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(m(p, q));
        if (std::sqrt(off) <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300) continue;
                const Complex phase = apq / g;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();

                const double tau = (aqq - app) / (2.0 * g);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;         // J[p][q]
                const Complex sm = s * std::conj(phase);

                // A <- J^H A J, expanded into row and column updates.
                for (int j = 0; j < n; ++j) {
                    const Complex mpj = m(p, j);
                    const Complex mqj = m(q, j);
                    m(p, j) = c * mpj - sp * mqj;
                    m(q, j) = sm * mpj + c * mqj;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex mip = m(i, p);
                    const Complex miq = m(i, q);
                    m(i, p) = c * mip - std::conj(sp) * miq;
                    m(i, q) = std::conj(sm) * mip + c * miq;
                    const Complex vip = vec(i, p);
                    const Complex viq = vec(i, q);
                    vec(i, p) = c * vip - std::conj(sp) * viq;
                    vec(i, q) = std::conj(sm) * vip + c * viq;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = m(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = vec(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a, const Tolerance& tol) {
    return hermitian_eig(a, tol).values;
}

}  // namespace mubtk
