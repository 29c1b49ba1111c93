#include "mubtk/haar.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mubtk {

namespace {

std::uint64_t splitmix_step(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a;
    std::uint64_t x = splitmix_step(s);
    s = x ^ b;
    return splitmix_step(s);
}

std::uint64_t RngStream::next_u64() { return splitmix_step(state_); }

double RngStream::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RngStream::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Matrix haar_unitary(int dim, RngStream& rng) {
    const int n = dim;
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex{rng.next_gaussian(), rng.next_gaussian()};

    // Householder QR; q accumulates H_1 ... H_{n-1}.
    Matrix q = Matrix::identity(n);
    std::vector<Complex> v(n);
    for (int k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < n; ++i) norm2 += std::norm(a(i, k));
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;  // measure-zero degenerate column

        const Complex akk = a(k, k);
        const double akk_abs = std::abs(akk);
        const Complex phase = akk_abs > 0.0 ? akk / akk_abs : Complex{1.0, 0.0};
        const Complex alpha = -phase * norm;

        double vnorm2 = std::norm(akk - alpha);
        v[k] = akk - alpha;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k);
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;

        for (int j = k; j < n; ++j) {
            Complex w{0.0, 0.0};
            for (int i = k; i < n; ++i) w += std::conj(v[i]) * a(i, j);
            w *= tau;
            for (int i = k; i < n; ++i) a(i, j) -= w * v[i];
        }
        for (int r = 0; r < n; ++r) {
            Complex w{0.0, 0.0};
            for (int i = k; i < n; ++i) w += q(r, i) * v[i];
            w *= tau;
            for (int i = k; i < n; ++i) q(r, i) -= w * std::conj(v[i]);
        }
    }

    // Canonical factor: fold the phases of R's diagonal into Q, leaving the
    // unique decomposition with positive-diagonal R.
    for (int j = 0; j < n; ++j) {
        const Complex rjj = a(j, j);
        const double m = std::abs(rjj);
        const Complex phase = m > 0.0 ? rjj / m : Complex{1.0, 0.0};
        for (int i = 0; i < n; ++i) q(i, j) *= phase;
    }
    return q;
}

Matrix sample_unitary(const SamplerConfig& cfg, std::int64_t index) {
    if (cfg.dim < 1) throw std::invalid_argument("sample_unitary: dim must be positive");
    if (index < 0) throw std::invalid_argument("sample_unitary: index must be nonnegative");
    RngStream rng(RngStream::mix(cfg.seed, static_cast<std::uint64_t>(index)));
    return haar_unitary(cfg.dim, rng);
}

IntegralEstimate integrate(const WitnessFunction& w, const SamplerConfig& cfg, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("integrate: need n >= 2 samples");
    if (cfg.chunk_size < 1) throw std::invalid_argument("integrate: chunk_size must be positive");
    if (w.dim != cfg.dim)
        throw std::invalid_argument("integrate: witness dimension " + std::to_string(w.dim) +
                                    " does not match sampler dimension " + std::to_string(cfg.dim));

    const std::int64_t chunk = cfg.chunk_size;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;
    struct Partial {
        double sum = 0.0;
        double sumsq = 0.0;
    };
    std::vector<Partial> parts(static_cast<std::size_t>(nchunks));

    auto run_chunk = [&](std::int64_t c) {
        const std::int64_t lo = c * chunk;
        const std::int64_t hi = std::min(lo + chunk, n);
        Partial p;
        for (std::int64_t i = lo; i < hi; ++i) {
            const double x = w.evaluate(sample_unitary(cfg, i));
            p.sum += x;
            p.sumsq += x * x;
        }
        parts[static_cast<std::size_t>(c)] = p;
    };

    // Chunks are independent; workers pull them from a shared counter. Each
    // chunk's result lands in its own slot, and the reduction below walks the
    // slots in chunk order, so scheduling cannot change the output.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(nchunks, hw));
    if (workers <= 1) {
        for (std::int64_t c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::int64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1)) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (const auto& p : parts) {
        sum += p.sum;
        sumsq += p.sumsq;
    }
    IntegralEstimate est;
    est.mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, (sumsq - static_cast<double>(n) * est.mean * est.mean) /
                                         static_cast<double>(n - 1));
    est.std_err = std::sqrt(var / static_cast<double>(n));
    est.n_samples = n;
    est.seed = cfg.seed;
    return est;
}

}  // namespace mubtk
