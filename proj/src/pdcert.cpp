#include "mubtk/pdcert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mubtk {

namespace {

constexpr double kRefuteThreshold = 1e-6;  // refutation needs slack above eigensolver noise

void check_tuple(const std::vector<Matrix>& unitaries, const Tolerance& tol) {
    if (unitaries.empty()) throw std::invalid_argument("gram: empty tuple");
    const int d = unitaries.front().dim();
    for (const auto& u : unitaries) {
        if (u.dim() != d) throw std::invalid_argument("gram: mixed dimensions in tuple");
        if (!is_unitary(u, tol)) throw std::invalid_argument("gram: non-unitary tuple member");
    }
}

double lambda_min_of(const Matrix& g) { return hermitian_eigenvalues(g).front(); }

Matrix subtract_shift(const Matrix& g, double alpha0) {
    const int m = g.dim();
    Matrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = g(i, j) - alpha0;
    return out;
}

}  // namespace

Matrix gram(const WitnessFunction& w, const std::vector<Matrix>& unitaries, const Tolerance& tol) {
    if (!w.star_symmetric)
        throw std::invalid_argument("gram: witness '" + w.name + "' is not star-symmetric, Gram would not be symmetric");
    check_tuple(unitaries, tol);
    const int m = static_cast<int>(unitaries.size());
    Matrix g(m);
    for (int r = 0; r < m; ++r) {
        for (int t = r; t < m; ++t) {
            const double v = w.evaluate(matmul(adjoint(unitaries[r]), unitaries[t]));
            g(r, t) = v;
            g(t, r) = v;
        }
    }
    return g;
}

PsdReport psd_check(const Matrix& g, double threshold) {
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (std::abs(g(i, j).imag()) > 1e-10 || std::abs(g(i, j) - g(j, i)) > 1e-10)
                throw std::invalid_argument("psd_check: input is not real symmetric");
        }
    PsdReport rep;
    rep.lambda_min = lambda_min_of(g);
    rep.psd = rep.lambda_min >= -threshold;
    return rep;
}

GramReport shifted_check(const WitnessFunction& w, double alpha0, const std::vector<Matrix>& unitaries,
                         double threshold) {
    const Matrix g = gram(w, unitaries);
    GramReport rep;
    rep.witness_name = w.name;
    rep.m = g.dim();
    rep.dim = unitaries.front().dim();
    rep.lambda_min = lambda_min_of(g);
    rep.lambda_min_shifted = lambda_min_of(subtract_shift(g, alpha0));
    if (w.haar_mean && alpha0 > *w.haar_mean)
        rep.note = "alpha0 exceeds the witness Haar mean; the shifted test is not expected to pass";
    else if (*rep.lambda_min_shifted < -threshold)
        rep.note = "shifted Gram matrix has an eigenvalue below -threshold";
    return rep;
}

Matrix gram_h0_via_projectors(const std::vector<Matrix>& unitaries, int dim_cap) {
    check_tuple(unitaries, Tolerance{});
    const int d = unitaries.front().dim();
    if (d > dim_cap)
        throw std::invalid_argument("gram_h0_via_projectors: dim " + std::to_string(d) + " above cap " +
                                    std::to_string(dim_cap));
    const int m = static_cast<int>(unitaries.size());
    const int dd = d * d;

    // Q_t[a][b] = sum_j v_j[a] conj(v_j[b]) with v_j = (U_t e_j) tensor (U_t e_j).
    std::vector<std::vector<Complex>> qs(static_cast<std::size_t>(m));
    std::vector<Complex> v(static_cast<std::size_t>(dd));
    for (int t = 0; t < m; ++t) {
        auto& q = qs[static_cast<std::size_t>(t)];
        q.assign(static_cast<std::size_t>(dd) * dd, Complex{0.0, 0.0});
        const Matrix& u = unitaries[static_cast<std::size_t>(t)];
        for (int j = 0; j < d; ++j) {
            for (int p = 0; p < d; ++p)
                for (int r = 0; r < d; ++r) v[static_cast<std::size_t>(p) * d + r] = u(p, j) * u(r, j);
            for (int a = 0; a < dd; ++a) {
                const Complex va = v[static_cast<std::size_t>(a)];
                for (int b = 0; b < dd; ++b)
                    q[static_cast<std::size_t>(a) * dd + b] += va * std::conj(v[static_cast<std::size_t>(b)]);
            }
        }
    }

    Matrix g(m);
    for (int r = 0; r < m; ++r) {
        for (int t = r; t < m; ++t) {
            const auto& qr = qs[static_cast<std::size_t>(r)];
            const auto& qt = qs[static_cast<std::size_t>(t)];
            Complex tr{0.0, 0.0};
            for (int a = 0; a < dd; ++a)
                for (int b = 0; b < dd; ++b)
                    tr += qr[static_cast<std::size_t>(a) * dd + b] * qt[static_cast<std::size_t>(b) * dd + a];
            g(r, t) = tr.real();
            g(t, r) = tr.real();
        }
    }
    return g;
}

GramReport sampled_gram_report(const WitnessFunction& w, const SamplerConfig& cfg, int m,
                               std::optional<double> alpha0, double threshold) {
    if (m < 1) throw std::invalid_argument("sampled_gram_report: m must be positive");
    std::vector<Matrix> tuple;
    tuple.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tuple.push_back(sample_unitary(cfg, i));

    GramReport rep;
    if (alpha0) {
        rep = shifted_check(w, *alpha0, tuple, threshold);
    } else {
        const Matrix g = gram(w, tuple);
        rep.witness_name = w.name;
        rep.m = m;
        rep.dim = cfg.dim;
        rep.lambda_min = lambda_min_of(g);
    }
    rep.seed = cfg.seed;
    rep.m = m;
    rep.dim = cfg.dim;
    rep.witness_name = w.name;
    return rep;
}

namespace {

constexpr std::uint64_t kSearchTag = 0x73656172636855ULL;

// Random Hermitian direction with unit Frobenius norm.
Matrix random_hermitian(int dim, RngStream& rng) {
    Matrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};
    Matrix hmat(dim);
    double fro = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            hmat(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
            fro += std::norm(hmat(i, j));
        }
    fro = std::sqrt(fro);
    if (fro > 0.0)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) hmat(i, j) /= fro;
    return hmat;
}

// exp(i * delta * H) through the eigendecomposition of H; exactly unitary up
// to roundoff.
Matrix unitary_exp_step(const Matrix& hmat, double delta) {
    const EigenSystem es = hermitian_eig(hmat);
    const int n = hmat.dim();
    Matrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                s += es.vectors(i, k) * std::polar(1.0, delta * es.values[k]) * std::conj(es.vectors(j, k));
            out(i, j) = s;
        }
    }
    return out;
}

struct RestartOutcome {
    double lambda_min = 0.0;
    std::vector<int> accepted;
    std::vector<Matrix> tuple;
};

RestartOutcome run_restart(const WitnessFunction& w, int m, const SamplerConfig& cfg, std::uint64_t restart,
                           int steps) {
    RngStream rng(RngStream::mix(RngStream::mix(cfg.seed, kSearchTag), restart));
    RestartOutcome out;
    out.tuple.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.tuple.push_back(haar_unitary(cfg.dim, rng));
    out.lambda_min = lambda_min_of(gram(w, out.tuple));

    const double delta_hi = 0.3, delta_lo = 0.01;
    for (int s = 0; s < steps; ++s) {
        const double frac = steps > 1 ? static_cast<double>(s) / (steps - 1) : 0.0;
        const double delta = delta_hi * std::pow(delta_lo / delta_hi, frac);
        const int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
        const Matrix step = unitary_exp_step(random_hermitian(cfg.dim, rng), delta);
        const Matrix cand = matmul(out.tuple[static_cast<std::size_t>(k)], step);

        const Matrix saved = out.tuple[static_cast<std::size_t>(k)];
        out.tuple[static_cast<std::size_t>(k)] = cand;
        const double lm = lambda_min_of(gram(w, out.tuple));
        if (lm < out.lambda_min) {
            out.lambda_min = lm;
            out.accepted.push_back(s);
        } else {
            out.tuple[static_cast<std::size_t>(k)] = saved;
        }
    }
    return out;
}

}  // namespace

SearchReport counterexample_search(const WitnessFunction& w, int m, const SamplerConfig& cfg, int restarts,
                                   int steps) {
    if (m < 2) throw std::invalid_argument("counterexample_search: m must be >= 2");
    if (restarts < 1) throw std::invalid_argument("counterexample_search: restarts must be >= 1");
    if (w.dim != cfg.dim) throw std::invalid_argument("counterexample_search: witness/sampler dimension mismatch");

    SearchReport best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        RestartOutcome oc = run_restart(w, m, cfg, static_cast<std::uint64_t>(r), steps);
        if (!have || oc.lambda_min < best.report.lambda_min) {
            have = true;
            best.report.lambda_min = oc.lambda_min;
            best.best_restart = static_cast<std::uint64_t>(r);
            best.accepted_steps = std::move(oc.accepted);
        }
    }
    best.report.witness_name = w.name;
    best.report.m = m;
    best.report.dim = cfg.dim;
    best.report.seed = cfg.seed;
    return best;
}

std::vector<Matrix> replay_search_tuple(const WitnessFunction& w, int m, const SamplerConfig& cfg,
                                        std::uint64_t restart, int steps) {
    return run_restart(w, m, cfg, restart, steps).tuple;
}

EpsScanResult eps_scan(MKind kind, const std::vector<double>& eps_grid, int m, int trials,
                       const SamplerConfig& cfg, int cx_restarts, int cx_steps, std::int64_t mc_samples) {
    if (eps_grid.empty()) throw std::invalid_argument("eps_scan: empty grid");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (eps_grid[i] < 0.0) throw std::invalid_argument("eps_scan: grid must be nonnegative");
        if (i > 0 && eps_grid[i] <= eps_grid[i - 1]) throw std::invalid_argument("eps_scan: grid must be ascending");
    }
    if (trials < 1) throw std::invalid_argument("eps_scan: trials must be >= 1");
    if (cfg.dim != 6) throw std::invalid_argument("eps_scan: the combination witnesses live on U(6)");

    const WitnessFunction wh = h_witness(6);
    const WitnessFunction wm = m_witness(kind);

    // One tuple per trial, shared across the grid: G_eps = G_h + eps * G_m.
    std::vector<Matrix> gh, gm;
    gh.reserve(static_cast<std::size_t>(trials));
    gm.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        std::vector<Matrix> tuple;
        tuple.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            tuple.push_back(sample_unitary(cfg, static_cast<std::int64_t>(t) * m + i));
        gh.push_back(gram(wh, tuple));
        gm.push_back(gram(wm, tuple));
    }

    EpsScanResult res;
    res.kind = to_string(kind);
    res.eps_grid = eps_grid;
    res.m = m;
    res.trials = trials;
    res.seed = cfg.seed;
    res.lambda_min_curve.reserve(eps_grid.size());

    for (std::size_t e = 0; e < eps_grid.size(); ++e) {
        const double eps = eps_grid[e];
        double lm = 0.0;
        bool first = true;
        for (int t = 0; t < trials; ++t) {
            Matrix g(m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) g(i, j) = gh[static_cast<std::size_t>(t)](i, j) +
                                                      eps * gm[static_cast<std::size_t>(t)](i, j);
            const double v = lambda_min_of(g);
            if (first || v < lm) {
                lm = v;
                first = false;
            }
        }
        if (cx_restarts > 0 && cx_steps > 0) {
            SamplerConfig sub = cfg;
            sub.seed = RngStream::mix(cfg.seed, 0xCE000000ULL + e);
            const WitnessFunction weps = h_plus_eps_m_witness(kind, eps);
            const SearchReport sr = counterexample_search(weps, m, sub, cx_restarts, cx_steps);
            lm = std::min(lm, sr.report.lambda_min);
        }
        res.lambda_min_curve.push_back(lm);
        if (!res.refuted_at && lm < -kRefuteThreshold) res.refuted_at = eps;
    }

    if (!res.refuted_at && mc_samples >= 2) {
        // Conditional improved bound at the largest un-refuted epsilon.
        SamplerConfig mc = cfg;
        mc.seed = RngStream::mix(cfg.seed, 0x4D43ULL);
        const IntegralEstimate em = integrate(wm, mc, mc_samples);
        const double eps = res.eps_grid.back();
        const double base = 5.0 / 7.0;  // Haar mean of h at d = 6
        const double den_lo = base + eps * (em.mean - 3.0 * em.std_err);
        const double den_hi = base + eps * (em.mean + 3.0 * em.std_err);
        if (den_lo > 0.0) {
            EpsScanResult::ConditionalBound cb;
            cb.eps = eps;
            cb.m_mean = em.mean;
            cb.m_std_err = em.std_err;
            cb.bound_lo = 5.0 / den_hi;
            cb.bound_hi = 5.0 / den_lo;
            cb.label = "conditional on positive definiteness (not refuted at this grid/budget; not proven)";
            res.conditional = cb;
        }
    }
    return res;
}

}  // namespace mubtk
