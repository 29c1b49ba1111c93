#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubtk/linalg.hpp"
#include "mubtk/mub.hpp"

namespace mubtk {

/// Raised when a Delsarte-scheme hypothesis fails (non-positive Haar mean).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A named real-valued function on U(d). Evaluators are total on all finite
/// matrices, not only unitaries, so property tests can feed arbitrary input.
struct WitnessFunction {
    std::string name;
    int dim = 0;
    std::function<double(const Matrix&)> evaluate;
    std::optional<double> value_at_identity;  // closed form, when known
    std::optional<double> haar_mean;          // closed form, when known
    bool star_symmetric = true;               // w(Z*) == w(Z)
};

// --- direct evaluators ------------------------------------------------------

/// Sum over all entries of |z_ij|^4. Equals d at the identity and 1 on every
/// scaled Hadamard matrix.
double h0(const Matrix& z);

/// h0(z) - 1: nonpositive exactly on the scaled-Hadamard set, identity value
/// d-1, Haar mean (d-1)/(d+1).
double h(const Matrix& z);

/// A permutation of {0,...,5}. Images are validated to be a bijection.
struct Permutation {
    std::array<int, 6> images;

    explicit Permutation(const std::array<int, 6>& img);
    int operator()(int i) const { return images[i]; }
    int parity() const;  // +1 even, -1 odd
};

/// All 720 permutations in lexicographic order of their image tuples.
const std::vector<Permutation>& all_s6();

/// The per-permutation column sum
///   s_pi(z) = sum_j z[pi(0)][j] z[pi(1)][j] z[pi(2)][j]
///             * conj(z[pi(3)][j] z[pi(4)][j] z[pi(5)][j]).
/// Indexing is 0-based throughout.
Complex inner_sum(const Matrix& z, const Permutation& pi);

/// Real part of the sum of s_pi over all of S_6, computed through the
/// 20-subset factorization (each unordered split of the six rows into a
/// triple and its complement is hit by 3!*3! = 36 permutations). Throws if
/// the imaginary residue exceeds 1e-10 of the term-magnitude sum, which
/// would signal an implementation bug: the subset terms come in conjugate
/// pairs, so the sum is real.
double m1(const Matrix& z);

/// m1 of the conjugate transpose.
double m2(const Matrix& z);

// --- witness factories ------------------------------------------------------

enum class MKind { sum_sq, sq_sum, prod_sq };

MKind mkind_from_string(const std::string& s);
std::string to_string(MKind kind);

WitnessFunction h0_witness(int dim);
WitnessFunction h_witness(int dim);

/// h0 - beta. The useful range is 1 <= beta <= 2d/(d+1); outside it the
/// witness is still constructed (exploration is allowed) but
/// beta_in_range() reports the violation.
WitnessFunction h_beta_witness(int dim, double beta);
bool beta_in_range(int dim, double beta);

/// The nonnegative combinations of m1, m2 (dimension 6 only):
/// (m1+m2)^2, m1^2+m2^2 or (m1*m2)^2. Identity value 0, no closed-form
/// Haar mean (estimate by Monte Carlo).
WitnessFunction m_witness(MKind kind);

/// h + eps*m for the given combination kind (dimension 6 only).
WitnessFunction h_plus_eps_m_witness(MKind kind, double eps);

/// Witness lookup by the CLI name syntax: "h0", "h", "h_beta:<f>", "m1",
/// "m2", "m:<kind>", "h_plus_eps_m:<kind>:<f>".
WitnessFunction witness_by_name(const std::string& spec, int dim);

// --- Delsarte machinery -----------------------------------------------------

/// h(1) / integral(h): the cardinality bound for sets whose pairwise
/// quotients avoid the support of the witness. Throws HypothesisError when
/// the supplied mean is not positive.
double delsarte_bound(const WitnessFunction& w, double haar_mean);

struct AuditReport {
    double S = 0.0;       // sum of w over all ordered quotient pairs
    double upper = 0.0;   // w(I) * |B|
    double lower = 0.0;   // haar_mean * |B|^2
    bool valid = false;   // sandwich holds and off-diagonal values vanish
    double max_offdiag = 0.0;
};

/// Evaluates the Delsarte sandwich lower <= S <= upper on a concrete family
/// and checks that every off-diagonal witness value is numerically zero.
AuditReport delsarte_audit(const MubSystem& b, const WitnessFunction& w);

}  // namespace mubtk
