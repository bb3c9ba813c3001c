#pragma once

#include <variant>

#include "cvtailor/fidelity.hpp"
#include "cvtailor/protocol.hpp"

namespace cvtailor {

namespace strategy {

/// epsilon = g * beta.
struct Standard {
    double gain = 1.0;
};
/// Bob knows the target; the best guess is the true alpha.
struct OptimalKnownTarget {};
/// Known phase (real axis), unknown amplitude.
struct LineTailored {};
/// Known amplitude, unknown phase.
struct CircleTailored {
    double radius = 0.0;
};

}  // namespace strategy

using Strategy =
    std::variant<strategy::Standard, strategy::OptimalKnownTarget, strategy::LineTailored, strategy::CircleTailored>;

/// Throws std::domain_error for a negative gain or radius.
void validate(const Strategy& s);

/// epsilon = (1 - lambda) * guess + lambda * beta.
ComplexAmplitude optimal_displacement(ComplexAmplitude alpha_guess, ComplexAmplitude beta, const SqueezeLevel& sq);

/// Guess alpha = |beta| on the real axis.
ComplexAmplitude line_displacement(ComplexAmplitude beta, const SqueezeLevel& sq);

struct CircleDisplacement {
    ComplexAmplitude epsilon;
    /// beta was the origin; arg(beta) was taken as 0.
    bool origin_tiebreak = false;
};

/// Guess alpha = radius * exp(i arg beta).
CircleDisplacement circle_displacement(ComplexAmplitude beta, double radius, const SqueezeLevel& sq);

ComplexAmplitude standard_displacement(ComplexAmplitude beta, double g);

/// Bob's displacement for any strategy. `alpha` is only read by OptimalKnownTarget.
ComplexAmplitude displacement(const Strategy& s, ComplexAmplitude alpha, ComplexAmplitude beta,
                              const SqueezeLevel& sq);

}  // namespace cvtailor
