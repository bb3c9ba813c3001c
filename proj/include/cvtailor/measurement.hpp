#pragma once

// Schrodinger-picture averaging: sample Alice's outcome beta given the target,
// let Bob displace according to a strategy, and average the one-shot fidelity.
//
// Outcome density, obtained by normalising the transfer-operator result:
//
//     P(beta | alpha) = ((1 - lambda^2) / pi) exp(-(1 - lambda^2) |beta - alpha|^2)
//
// i.e. each component of beta - alpha is N(0, 1 / (2 (1 - lambda^2))). Under the
// Standard(g = 1) strategy this reproduces the closed-form (1 + lambda) / 2.

#include <cstddef>
#include <cstdint>
#include <random>

#include "cvtailor/alphabet.hpp"
#include "cvtailor/fidelity.hpp"
#include "cvtailor/protocol.hpp"
#include "cvtailor/strategies.hpp"

namespace cvtailor {

/// The outcome density degenerates as lambda -> 1.
inline constexpr double kLambdaCap = 0.999;
inline constexpr std::size_t kMinSamples = 1000;

class OutcomeModel {
public:
    explicit OutcomeModel(SqueezeLevel sq) : sq_(sq) {}
    const SqueezeLevel& squeeze() const noexcept { return sq_; }
    /// Variance of each component of beta around alpha.
    double component_variance() const noexcept;
    double density(ComplexAmplitude beta, ComplexAmplitude alpha) const noexcept;

private:
    SqueezeLevel sq_;
};

ComplexAmplitude sample_measurement(ComplexAmplitude alpha, const OutcomeModel& model, std::mt19937_64& rng);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// Samples are split into fixed-size chunks; chunk k draws from its own
/// generator seeded by derive_seed(seed, k). The result depends on
/// (seed, n, chunk_size) only, never on the number of threads.
struct McOptions {
    std::size_t threads = 1;
    std::size_t chunk_size = 8192;
};

/// SplitMix64 finaliser applied to seed and stream index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Throws std::invalid_argument for n < kMinSamples and std::domain_error for
/// lambda above kLambdaCap.
McEstimate mc_average_fidelity(const Strategy& strategy, ComplexAmplitude alpha, const SqueezeLevel& sq,
                               std::size_t n, std::uint64_t seed, const McOptions& options = {});

/// As above, but each sample also draws its target from `targets`. With a
/// LineUniform alphabet this measures the small-amplitude bias of the line guess.
McEstimate mc_alphabet_average_fidelity(const Strategy& strategy, const AlphabetDistribution& targets,
                                        const SqueezeLevel& sq, std::size_t n, std::uint64_t seed,
                                        const McOptions& options = {});

/// Deterministic 2-D Gauss-Hermite evaluation of the same average. order >= 8.
double quadrature_average_fidelity(const Strategy& strategy, ComplexAmplitude alpha, const SqueezeLevel& sq,
                                   int order);

}  // namespace cvtailor
