#pragma once

#include <cstdint>

#include "mubtk/linalg.hpp"
#include "mubtk/witness.hpp"

namespace mubtk {

/// Configuration for the seeded Haar sampler. chunk_size fixes the Monte
/// Carlo reduction grouping, so it is part of the determinism contract.
struct SamplerConfig {
    int dim = 0;
    std::uint64_t seed = 0;
    int chunk_size = 4096;
};

/// Monte Carlo estimate of a Haar integral. stderr is the sample standard
/// deviation over sqrt(n).
struct IntegralEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// Counter-style splitmix64 stream. A stream keyed by mix(seed, index) makes
/// every sample a pure function of (seed, index), which is what allows
/// parallel workers to produce bit-identical results in any schedule.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : state_(key) {}

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

    std::uint64_t next_u64();
    double next_unit();      // [0, 1)
    double next_gaussian();  // N(0,1), Box-Muller

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// One Haar-distributed unitary drawn from the stream: complex Ginibre
/// matrix, Householder QR, then the diagonal phases of R folded into Q so
/// that R has positive diagonal. Plain QR without the phase correction is
/// not Haar.
Matrix haar_unitary(int dim, RngStream& rng);

/// Deterministic function of (cfg.seed, index).
Matrix sample_unitary(const SamplerConfig& cfg, std::int64_t index);

/// Sample mean and stderr of w over n Haar unitaries. Per-chunk partial sums
/// are combined in chunk order, so results are bit-identical for fixed
/// (seed, n, chunk_size) regardless of worker count.
IntegralEstimate integrate(const WitnessFunction& w, const SamplerConfig& cfg, std::int64_t n);

}  // namespace mubtk
