#pragma once

#include <utility>
#include <vector>

#include "mubtk/linalg.hpp"

namespace mubtk {

/// An ordered family of orthonormal bases of C^d, each given as a unitary
/// matrix whose columns are the basis vectors.
struct MubSystem {
    int dim = 0;
    std::vector<Matrix> bases;
};

/// Arithmetic in F_{p^k} for odd prime p, k <= 4. Elements are encoded as
/// integers 0..q-1 whose base-p digits are the coefficients of the residue
/// polynomial (digit i = coefficient of x^i). The modulus is the
/// lexicographically smallest monic irreducible of degree k, found by
/// exhaustive divisor check.
class GaloisField {
public:
    GaloisField(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }  // c0..c_{k-1} of x^k + sum c_i x^i

    int add(int a, int b) const;
    int mul(int a, int b) const;
    int pow(int a, long long e) const;

    /// Field trace to F_p: a + a^p + ... + a^{p^{k-1}}, returned in 0..p-1.
    int trace(int a) const;

private:
    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;    // q*q
    std::vector<int> trace_table_;  // q
};

/// The three eigenbases of the Pauli matrices: a complete MUB system in d=2.
MubSystem construct_d2();

/// Quadratic Gauss-sum construction for odd prime p: the standard basis plus
/// p bases with vector components omega^(k l^2 + j l)/sqrt(p).
MubSystem construct_prime(int p);

/// Field-trace construction for q = p^k, p odd prime, k >= 2, q <= 49.
MubSystem construct_prime_power(int p, int k);

/// Dispatch on d: 2, odd primes, and odd prime powers are supported. Even
/// prime powers >= 4 need Galois rings and are rejected.
MubSystem construct(int d);

struct VerifyReport {
    bool ok = false;
    std::pair<int, int> worst_pair{-1, -1};
    double worst_deviation = 0.0;  // max over pairs and entries of | |entry| - 1/sqrt(d) |
};

/// Checks that every quotient adjoint(b_i) * b_j (i != j) is a scaled complex
/// Hadamard matrix, i.e. that the bases are pairwise unbiased.
VerifyReport verify_mub(const MubSystem& b, const Tolerance& tol = {});

}  // namespace mubtk
