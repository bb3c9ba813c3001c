#include "cvtailor/measurement.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cvtailor/quadrature.hpp"

namespace cvtailor {

double OutcomeModel::component_variance() const noexcept {
    const double l = sq_.lambda();
    return 1.0 / (2.0 * (1.0 - l * l));
}

double OutcomeModel::density(ComplexAmplitude beta, ComplexAmplitude alpha) const noexcept {
    const double l = sq_.lambda();
    const double k = 1.0 - l * l;
    return k / std::numbers::pi * std::exp(-k * (beta - alpha).norm());
}

ComplexAmplitude sample_measurement(ComplexAmplitude alpha, const OutcomeModel& model, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    const double sigma = std::sqrt(model.component_variance());
    const double dx = normal(rng);
    const double dy = normal(rng);
    return {alpha.x + sigma * dx, alpha.y + sigma * dy};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

void check_run(const SqueezeLevel& sq, std::size_t n, const McOptions& options) {
    if (n < kMinSamples) {
        throw std::invalid_argument("Monte Carlo needs at least " + std::to_string(kMinSamples) + " samples, got " +
                                    std::to_string(n));
    }
    if (sq.lambda() > kLambdaCap) {
        throw std::domain_error("squeezing parameter above the sampling cap " + std::to_string(kLambdaCap));
    }
    if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
}

// Runs `draw(rng)` n times in seeded chunks and reduces the per-chunk sums in
// chunk order.
template <class Draw>
McEstimate run_chunked(std::size_t n, std::uint64_t seed, const McOptions& options, Draw draw) {
    const std::size_t chunk = options.chunk_size;
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    std::vector<ChunkSums> sums(n_chunks);

    auto work = [&](std::size_t k) {
        std::mt19937_64 rng(derive_seed(seed, k));
        const std::size_t begin = k * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        ChunkSums s;
        for (std::size_t i = begin; i < end; ++i) {
            const double f = draw(rng);
            s.sum += f;
            s.sum_sq += f * f;
        }
        sums[k] = s;
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, n_chunks));
    if (workers == 1) {
        for (std::size_t k = 0; k < n_chunks; ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < n_chunks; k = next++) work(k);
            });
        }
    }

    ChunkSums total;
    for (const auto& s : sums) {
        total.sum += s.sum;
        total.sum_sq += s.sum_sq;
    }
    const double nd = static_cast<double>(n);
    const double mean = total.sum / nd;
    const double var = std::max(0.0, (total.sum_sq - nd * mean * mean) / (nd - 1.0));
    return McEstimate{.mean = mean, .std_error = std::sqrt(var / nd), .n_samples = n, .seed = seed};
}

}  // namespace

McEstimate mc_average_fidelity(const Strategy& strategy, ComplexAmplitude alpha, const SqueezeLevel& sq,
                               std::size_t n, std::uint64_t seed, const McOptions& options) {
    validate(strategy);
    check_run(sq, n, options);
    const OutcomeModel model(sq);
    return run_chunked(n, seed, options, [&](std::mt19937_64& rng) {
        const auto beta = sample_measurement(alpha, model, rng);
        return one_shot_fidelity(alpha, beta, displacement(strategy, alpha, beta, sq), sq).value();
    });
}

McEstimate mc_alphabet_average_fidelity(const Strategy& strategy, const AlphabetDistribution& targets,
                                        const SqueezeLevel& sq, std::size_t n, std::uint64_t seed,
                                        const McOptions& options) {
    validate(strategy);
    validate(targets);
    check_run(sq, n, options);
    const OutcomeModel model(sq);
    return run_chunked(n, seed, options, [&](std::mt19937_64& rng) {
        const auto alpha = sample_target(targets, rng);
        const auto beta = sample_measurement(alpha, model, rng);
        return one_shot_fidelity(alpha, beta, displacement(strategy, alpha, beta, sq), sq).value();
    });
}

double quadrature_average_fidelity(const Strategy& strategy, ComplexAmplitude alpha, const SqueezeLevel& sq,
                                   int order) {
    validate(strategy);
    if (order < 8) throw std::invalid_argument("measurement quadrature order must be >= 8");
    const double sigma = std::sqrt(OutcomeModel(sq).component_variance());
    const auto rule = gauss_hermite(order);
    return gaussian_expectation_2d(
        [&](double bx, double by) {
            const ComplexAmplitude beta{bx, by};
            return one_shot_fidelity(alpha, beta, displacement(strategy, alpha, beta, sq), sq).value();
        },
        alpha.x, alpha.y, sigma, sigma, rule);
}

}  // namespace cvtailor
