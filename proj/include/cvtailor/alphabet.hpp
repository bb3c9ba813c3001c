#pragma once

#include <random>
#include <variant>

#include "cvtailor/fidelity.hpp"
#include "cvtailor/protocol.hpp"

namespace cvtailor {

namespace alphabet {

/// alpha uniform on [0, alpha_max] along the real axis.
struct LineUniform {
    double alpha_max = 1.0;
};
/// Fixed modulus, uniform phase.
struct Circle {
    double radius = 0.0;
};
/// P(alpha) = exp(-ax^2 / (2 sx^2) - ay^2 / (2 sy^2)) / (2 pi sx sy).
struct Gaussian2D {
    double s_x = 1.0;
    double s_y = 1.0;
};

}  // namespace alphabet

using AlphabetDistribution = std::variant<alphabet::LineUniform, alphabet::Circle, alphabet::Gaussian2D>;

void validate(const AlphabetDistribution& dist);

ComplexAmplitude sample_target(const AlphabetDistribution& dist, std::mt19937_64& rng);

/// Alphabet-weighted average fidelity of the symmetric-gain teleporter for a
/// symmetric Gaussian alphabet, in closed form.
///
/// With V from variance_standard_gain, F(alpha) = A exp(-c |alpha|^2) where
/// A = 2 / (V + 1) and c = 2 (1 - g)^2 / (V + 1). Integrating against the
/// Gaussian gives A / (1 + 2 c s^2).
double gaussian_weighted_fidelity(const SqueezeLevel& sq, double g, double s);

/// The same integral by tensor-product Gauss-Hermite quadrature; also handles
/// s_x != s_y. Requires order >= 16.
double gaussian_weighted_fidelity_quadrature(const SqueezeLevel& sq, double g, double s_x, double s_y, int order);

}  // namespace cvtailor
