#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mubtk/linalg.hpp"

namespace mubtk {

/// A registered family of 6x6 complex Hadamard matrices, already scaled into
/// U(6). Every generated matrix is validated with is_scaled_hadamard at
/// tolerance 1e-10; a validation failure throws, so a transcription error in
/// a formula can never leak into conjecture verdicts.
struct HadamardFamily {
    std::string name;
    int n_params = 0;
    std::string citation;
    std::function<Matrix(const std::vector<double>&)> generate;  // phases in radians
};

/// Scaled Fourier matrix: entries omega^(jk)/sqrt(d), omega = exp(2 pi i/d).
Matrix fourier(int d);

/// The registered families: F6ab, F6ab_T, D6, C6, S6.
const std::vector<HadamardFamily>& catalog();
const HadamardFamily& family_by_name(const std::string& name);

/// Generate a member of a registered family (validated).
Matrix family(const std::string& name, const std::vector<double>& params);

/// Per-target values of the permutation functionals. vanishes means
/// |m1|, |m2| and every one of the 720 inner-sum moduli are all <= tol.
struct ConjectureRecord {
    double m1 = 0.0;
    double m2 = 0.0;
    double max_inner_sum = 0.0;
    bool vanishes = false;
};

/// Evaluates m1, m2 and the maximum inner-sum modulus on each target.
/// Targets must pass is_scaled_hadamard (tolerance 1e-10); anything else is
/// a precondition error. A non-vanishing record is a finding to report, not
/// an error.
std::vector<ConjectureRecord> conjecture_check(const std::vector<Matrix>& targets, double tol);

}  // namespace mubtk
