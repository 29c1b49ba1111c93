#include "mubtk/catalog6.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mubtk/witness.hpp"

namespace mubtk {

Matrix fourier(int d) {
    if (d < 1) throw std::invalid_argument("fourier: d must be positive");
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix m(d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const int t = (j * k) % d;
            m(j, k) = std::polar(norm, 2.0 * std::numbers::pi * t / d);
        }
    return m;
}

namespace {

constexpr double kValidationTol = 1e-10;

Matrix validated(Matrix m, const std::string& name) {
    Tolerance tol;
    tol.unitary_tol = kValidationTol;
    tol.hadamard_tol = kValidationTol;
    if (!is_scaled_hadamard(m, tol))
        throw std::runtime_error("family " + name + ": generated matrix failed Hadamard validation");
    return m;
}

void check_params(const HadamardFamily& f, const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != f.n_params)
        throw std::invalid_argument("family " + f.name + ": expected " + std::to_string(f.n_params) +
                                    " parameter(s), got " + std::to_string(params.size()));
}

// Two-parameter affine orbit of F6: extra phases e^{ia} on columns 1,4 and
// e^{ib} on columns 2,5 of the odd rows. At (0,0) this is exactly fourier(6).
Matrix gen_f6ab(double a, double b) {
    Matrix m = fourier(6);
    for (int row = 1; row < 6; row += 2)
        for (int col = 0; col < 6; ++col) {
            if (col % 3 == 1)
                m(row, col) *= std::polar(1.0, a);
            else if (col % 3 == 2)
                m(row, col) *= std::polar(1.0, b);
        }
    return m;
}

// Circulant-core quaternary Hadamard: dephased, with 5x5 circulant core from
// (-1, i, -i, -i, i); i sits on the quadratic residues mod 5.
Matrix d6_base() {
    static const Complex core[5] = {{-1, 0}, {0, 1}, {0, -1}, {0, -1}, {0, 1}};
    const double norm = 1.0 / std::sqrt(6.0);
    Matrix m(6);
    for (int j = 0; j < 6; ++j) m(0, j) = norm;
    for (int j = 1; j < 6; ++j) {
        m(j, 0) = norm;
        for (int k = 1; k < 6; ++k) m(j, k) = core[((k - j) % 5 + 5) % 5] * norm;
    }
    return m;
}

// One-parameter deformation pattern of the matrix above (exponents of
// e^{ic}); found by exhaustive search over zero-sum supports and verified by
// the generation-time validator.
constexpr int kD6Pattern[6][6] = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0},
    {0, 0, -1, 0, 0, -1},
    {0, 0, -1, 0, 0, -1},
    {0, 0, 0, 1, 1, 0},
};

Matrix gen_d6(double c) {
    Matrix m = d6_base();
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
            if (kD6Pattern[j][k] != 0) m(j, k) *= std::polar(1.0, c * kD6Pattern[j][k]);
    return m;
}

// Bjorck's circulant: first row (1, i*b, -b, -i, -conj(b), i*conj(b)) with
// the unimodular cyclic 6-roots number b = (1-sqrt(3))/2 + i*sqrt(sqrt(3)/2).
Matrix gen_c6() {
    const double s3 = std::sqrt(3.0);
    const Complex b{(1.0 - s3) / 2.0, std::sqrt(s3 / 2.0)};
    const Complex i{0.0, 1.0};
    const Complex x[6] = {{1.0, 0.0}, i * b, -b, -i, -std::conj(b), i * std::conj(b)};
    const double norm = 1.0 / std::sqrt(6.0);
    Matrix m(6);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) m(j, k) = x[((k - j) % 6 + 6) % 6] * norm;
    return m;
}

// Symmetric matrix over cube roots of unity.
Matrix gen_s6() {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex w2 = std::conj(w);
    const Complex one{1.0, 0.0};
    const Complex rows[6][6] = {
        {one, one, one, one, one, one},
        {one, one, w, w, w2, w2},
        {one, w, one, w2, w2, w},
        {one, w, w2, one, w, w2},
        {one, w2, w2, w, one, w},
        {one, w2, w, w2, w, one},
    };
    const double norm = 1.0 / std::sqrt(6.0);
    Matrix m(6);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) m(j, k) = rows[j][k] * norm;
    return m;
}

std::vector<HadamardFamily> build_catalog() {
    std::vector<HadamardFamily> fams;

    fams.push_back({"F6ab", 2,
                    "two-parameter affine Fourier family F6(a,b); Tadej & Zyczkowski, "
                    "A concise guide to complex Hadamard matrices (2006)",
                    [](const std::vector<double>& p) { return validated(gen_f6ab(p[0], p[1]), "F6ab"); }});

    fams.push_back({"F6ab_T", 2,
                    "transpose of the F6(a,b) family; Tadej & Zyczkowski catalog",
                    [](const std::vector<double>& p) {
                        const Matrix m = gen_f6ab(p[0], p[1]);
                        Matrix t(6);
                        for (int j = 0; j < 6; ++j)
                            for (int k = 0; k < 6; ++k) t(j, k) = m(k, j);
                        return validated(t, "F6ab_T");
                    }});

    fams.push_back({"D6", 1,
                    "one-parameter Dita family D6(c) through the circulant-core quaternary "
                    "Hadamard; Dita (2004), Tadej & Zyczkowski catalog",
                    [](const std::vector<double>& p) { return validated(gen_d6(p[0]), "D6"); }});

    fams.push_back({"C6", 0,
                    "Bjorck's cyclic 6-roots circulant; Bjorck & Froberg (1991), "
                    "Tadej & Zyczkowski catalog",
                    [](const std::vector<double>&) { return validated(gen_c6(), "C6"); }});

    fams.push_back({"S6", 0,
                    "symmetric spectral matrix over cube roots of unity; Tao (2004), "
                    "Tadej & Zyczkowski catalog",
                    [](const std::vector<double>&) { return validated(gen_s6(), "S6"); }});

    return fams;
}

}  // namespace

const std::vector<HadamardFamily>& catalog() {
    static const std::vector<HadamardFamily> fams = build_catalog();
    return fams;
}

const HadamardFamily& family_by_name(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown Hadamard family '" + name + "'");
}

Matrix family(const std::string& name, const std::vector<double>& params) {
    const HadamardFamily& f = family_by_name(name);
    check_params(f, params);
    return f.generate(params);
}

std::vector<ConjectureRecord> conjecture_check(const std::vector<Matrix>& targets, double tol) {
    Tolerance vtol;
    vtol.unitary_tol = kValidationTol;
    vtol.hadamard_tol = kValidationTol;
    for (const auto& t : targets)
        if (!is_scaled_hadamard(t, vtol))
            throw std::invalid_argument("conjecture_check: target is not a scaled Hadamard matrix");

    std::vector<ConjectureRecord> out;
    out.reserve(targets.size());
    for (const auto& t : targets) {
        ConjectureRecord rec;
        rec.m1 = m1(t);
        rec.m2 = m2(t);
        rec.max_inner_sum = 0.0;
        for (const auto& pi : all_s6()) rec.max_inner_sum = std::max(rec.max_inner_sum, std::abs(inner_sum(t, pi)));
        rec.vanishes = std::abs(rec.m1) <= tol && std::abs(rec.m2) <= tol && rec.max_inner_sum <= tol;
        out.push_back(rec);
    }
    return out;
}

}  // namespace mubtk
