#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mubtk {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage. Values are immutable by
/// convention: every operation returns a fresh matrix, so instances can be
/// shared freely across threads.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim);                              // zero matrix
    Matrix(int dim, std::vector<Complex> entries);         // validates size and finiteness

    static Matrix identity(int dim);

    int dim() const { return dim_; }
    const Complex& operator()(int r, int c) const { return e_[idx(r, c)]; }
    Complex& operator()(int r, int c) { return e_[idx(r, c)]; }
    const std::vector<Complex>& entries() const { return e_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * dim_ + c; }

    int dim_ = 0;
    std::vector<Complex> e_;
};

/// Numerical tolerances for the predicates and the eigensolver.
struct Tolerance {
    double unitary_tol = 1e-10;
    double hadamard_tol = 1e-10;
    double eig_tol = 1e-8;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);

/// Max-entry deviation of a*a from the identity.
double unitary_deviation(const Matrix& a);

/// True iff max entry of (a* a - I) is within unitary_tol.
bool is_unitary(const Matrix& a, const Tolerance& tol = {});

/// True iff a is unitary and every entry has modulus 1/sqrt(dim) within
/// hadamard_tol. This is the set of scaled complex Hadamard matrices, the
/// allowed quotients of a pairwise unbiased family.
bool is_scaled_hadamard(const Matrix& a, const Tolerance& tol = {});

/// Eigenvalues of a Hermitian matrix, ascending. Throws std::invalid_argument
/// when the input deviates from Hermitian by more than 1e-10 per entry.
std::vector<double> hermitian_eigenvalues(const Matrix& a, const Tolerance& tol = {});

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Full Hermitian eigendecomposition (cyclic complex Jacobi). Deterministic:
/// fixed sweep order, no pivot randomization.
EigenSystem hermitian_eig(const Matrix& a, const Tolerance& tol = {});

}  // namespace mubtk
