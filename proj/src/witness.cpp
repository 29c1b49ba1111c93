#include "mubtk/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mubtk {

double h0(const Matrix& z) {
    double s = 0.0;
    for (const auto& e : z.entries()) {
        const double n2 = std::norm(e);
        s += n2 * n2;
    }
    return s;
}

double h(const Matrix& z) { return h0(z) - 1.0; }

Permutation::Permutation(const std::array<int, 6>& img) : images(img) {
    std::array<bool, 6> seen{};
    for (int v : images) {
        if (v < 0 || v > 5 || seen[v]) throw std::invalid_argument("Permutation: images must be a bijection on 0..5");
        seen[v] = true;
    }
}

int Permutation::parity() const {
    int inversions = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (images[i] > images[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

const std::vector<Permutation>& all_s6() {
    static const std::vector<Permutation> perms = [] {
        std::vector<Permutation> out;
        out.reserve(720);
        std::array<int, 6> img{0, 1, 2, 3, 4, 5};
        do {
            out.push_back(Permutation(img));
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }();
    return perms;
}

namespace {

void require_dim6(const Matrix& z, const char* who) {
    if (z.dim() != 6) throw std::invalid_argument(std::string(who) + ": requires dimension 6");
}

// The 20 three-element subsets of {0..5} as bitmasks.
const std::vector<unsigned>& triple_masks() {
    static const std::vector<unsigned> masks = [] {
        std::vector<unsigned> out;
        for (unsigned m = 0; m < 64; ++m)
            if (__builtin_popcount(m) == 3) out.push_back(m);
        return out;
    }();
    return masks;
}

}  // namespace

Complex inner_sum(const Matrix& z, const Permutation& pi) {
    require_dim6(z, "inner_sum");
    Complex s{0.0, 0.0};
    for (int j = 0; j < 6; ++j) {
        const Complex t = z(pi(0), j) * z(pi(1), j) * z(pi(2), j) *
                          std::conj(z(pi(3), j) * z(pi(4), j) * z(pi(5), j));
        s += t;
    }
    return s;
}

double m1(const Matrix& z) {
    require_dim6(z, "m1");
    Complex total{0.0, 0.0};
    double mag = 0.0;
    for (int j = 0; j < 6; ++j) {
        Complex col[6];
        Complex colc[6];
        for (int r = 0; r < 6; ++r) {
            col[r] = z(r, j);
            colc[r] = std::conj(col[r]);
        }
        for (unsigned mask : triple_masks()) {
            Complex t{1.0, 0.0};
            for (int r = 0; r < 6; ++r) t *= (mask >> r & 1u) ? col[r] : colc[r];
            total += t;
            mag += std::abs(t);
        }
    }
    if (std::abs(total.imag()) > 1e-10 * mag)
        throw std::runtime_error("m1: imaginary residue above tolerance (implementation bug)");
    return 36.0 * total.real();
}

double m2(const Matrix& z) {
    require_dim6(z, "m2");
    return m1(adjoint(z));
}

MKind mkind_from_string(const std::string& s) {
    if (s == "sum_sq") return MKind::sum_sq;
    if (s == "sq_sum") return MKind::sq_sum;
    if (s == "prod_sq") return MKind::prod_sq;
    throw std::invalid_argument("unknown combination kind '" + s + "' (want sum_sq, sq_sum or prod_sq)");
}

std::string to_string(MKind kind) {
    switch (kind) {
        case MKind::sum_sq: return "sum_sq";
        case MKind::sq_sum: return "sq_sum";
        case MKind::prod_sq: return "prod_sq";
    }
    return "?";
}

WitnessFunction h0_witness(int dim) {
    WitnessFunction w;
    w.name = "h0";
    w.dim = dim;
    w.evaluate = [](const Matrix& z) { return h0(z); };
    w.value_at_identity = static_cast<double>(dim);
    w.haar_mean = 2.0 * dim / (dim + 1.0);
    return w;
}

WitnessFunction h_witness(int dim) {
    WitnessFunction w;
    w.name = "h";
    w.dim = dim;
    w.evaluate = [](const Matrix& z) { return h(z); };
    w.value_at_identity = static_cast<double>(dim) - 1.0;
    w.haar_mean = (dim - 1.0) / (dim + 1.0);
    return w;
}

bool beta_in_range(int dim, double beta) { return beta >= 1.0 && beta <= 2.0 * dim / (dim + 1.0); }

WitnessFunction h_beta_witness(int dim, double beta) {
    WitnessFunction w;
    w.name = "h_beta:" + std::to_string(beta);
    w.dim = dim;
    w.evaluate = [beta](const Matrix& z) { return h0(z) - beta; };
    w.value_at_identity = static_cast<double>(dim) - beta;
    w.haar_mean = 2.0 * dim / (dim + 1.0) - beta;
    return w;
}

WitnessFunction m_witness(MKind kind) {
    WitnessFunction w;
    w.name = "m:" + to_string(kind);
    w.dim = 6;
    w.evaluate = [kind](const Matrix& z) {
        const double a = m1(z);
        const double b = m2(z);
        switch (kind) {
            case MKind::sum_sq: return (a + b) * (a + b);
            case MKind::sq_sum: return a * a + b * b;
            case MKind::prod_sq: return (a * b) * (a * b);
        }
        return 0.0;
    };
    w.value_at_identity = 0.0;
    w.haar_mean = std::nullopt;  // no closed form; estimate by Monte Carlo
    return w;
}

WitnessFunction h_plus_eps_m_witness(MKind kind, double eps) {
    WitnessFunction m = m_witness(kind);
    WitnessFunction w;
    w.name = "h_plus_eps_m:" + to_string(kind) + ":" + std::to_string(eps);
    w.dim = 6;
    w.evaluate = [eval = m.evaluate, eps](const Matrix& z) { return h(z) + eps * eval(z); };
    w.value_at_identity = 5.0;  // h(I) = d-1, m(I) = 0
    w.haar_mean = std::nullopt;
    return w;
}

WitnessFunction witness_by_name(const std::string& spec, int dim) {
    if (spec == "h0") return h0_witness(dim);
    if (spec == "h") return h_witness(dim);
    if (spec == "m1" || spec == "m2") {
        if (dim != 6) throw std::invalid_argument("witness '" + spec + "' requires --dim 6");
        WitnessFunction w;
        w.name = spec;
        w.dim = 6;
        w.evaluate = (spec == "m1") ? +[](const Matrix& z) { return m1(z); }
                                    : +[](const Matrix& z) { return m2(z); };
        w.value_at_identity = 0.0;
        w.star_symmetric = false;  // m1(Z*) = m2(Z), not m1(Z)
        return w;
    }
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    try {
        if (head == "h_beta" && colon != std::string::npos)
            return h_beta_witness(dim, std::stod(spec.substr(colon + 1)));
        if (head == "m" && colon != std::string::npos) {
            if (dim != 6) throw std::invalid_argument("witness '" + spec + "' requires --dim 6");
            return m_witness(mkind_from_string(spec.substr(colon + 1)));
        }
        if (head == "h_plus_eps_m" && colon != std::string::npos) {
            if (dim != 6) throw std::invalid_argument("witness '" + spec + "' requires --dim 6");
            const auto rest = spec.substr(colon + 1);
            const auto colon2 = rest.find(':');
            if (colon2 == std::string::npos) throw std::invalid_argument("expected h_plus_eps_m:<kind>:<eps>");
            return h_plus_eps_m_witness(mkind_from_string(rest.substr(0, colon2)), std::stod(rest.substr(colon2 + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed witness spec '" + spec + "'");
    }
    throw std::invalid_argument("unknown witness '" + spec + "'");
}

double delsarte_bound(const WitnessFunction& w, double haar_mean) {
    if (!w.value_at_identity)
        throw std::invalid_argument("delsarte_bound: witness '" + w.name + "' has no identity value");
    if (!(haar_mean > 0.0))
        throw HypothesisError("delsarte_bound: Haar mean " + std::to_string(haar_mean) +
                              " is not positive; the Delsarte hypothesis fails");
    return *w.value_at_identity / haar_mean;
}

AuditReport delsarte_audit(const MubSystem& b, const WitnessFunction& w) {
    if (!w.haar_mean) throw std::invalid_argument("delsarte_audit: witness '" + w.name + "' has no closed-form mean");
    if (!w.value_at_identity)
        throw std::invalid_argument("delsarte_audit: witness '" + w.name + "' has no identity value");
    for (const auto& u : b.bases)
        if (!is_unitary(u)) throw std::invalid_argument("delsarte_audit: non-unitary member");

    const int m = static_cast<int>(b.bases.size());
    AuditReport rep;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const double v = w.evaluate(matmul(adjoint(b.bases[i]), b.bases[j]));
            rep.S += v;
            if (i != j) rep.max_offdiag = std::max(rep.max_offdiag, v);
        }
    }
    rep.upper = *w.value_at_identity * m;
    rep.lower = *w.haar_mean * m * m;
    constexpr double kTol = 1e-8;
    rep.valid = rep.lower <= rep.S + kTol && rep.S <= rep.upper + kTol && rep.max_offdiag <= kTol;
    return rep;
}

}  // namespace mubtk
