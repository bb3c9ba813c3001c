#pragma once

// Heisenberg-picture variance algebra of the tailored teleporter.
//
// Convention: every quadrature of a vacuum (or coherent) mode has variance 1.
// With this convention standard unit-gain teleportation without squeezing
// gives V = 3 and an average fidelity of 1/2.

#include <cmath>
#include <numbers>

namespace cvtailor {

/// Entanglement strength of the two-mode squeezed vacuum.
///
/// Holds both the parametric gain G >= 1 and the squeezing parameter
/// lambda = sqrt((G - 1) / G) in [0, 1), so callers never convert ad hoc.
class SqueezeLevel {
public:
    /// Throws std::domain_error unless G is finite and G >= 1.
    static SqueezeLevel from_gain(double G);
    /// Throws std::domain_error unless 0 <= lambda < 1.
    static SqueezeLevel from_lambda(double lambda);

    double gain() const noexcept { return gain_; }
    double lambda() const noexcept { return lambda_; }
    /// sqrt(G (G - 1)), the correlation term shared by every variance formula.
    double correlation() const noexcept { return std::sqrt(gain_ * (gain_ - 1.0)); }

private:
    SqueezeLevel(double gain, double lambda) noexcept : gain_(gain), lambda_(lambda) {}
    double gain_;
    double lambda_;
};

inline constexpr double kMaxEta = std::numbers::pi / 4.0;

/// Alice's beam-splitter angle and the two classical-channel gains.
/// Gains absorb the 1/sqrt(2) normalisation: unit gain is g1 = g2 = 1/sqrt(2).
struct ProtocolSettings {
    double eta = kMaxEta;
    double g1 = std::numbers::sqrt2 / 2.0;
    double g2 = std::numbers::sqrt2 / 2.0;

    /// Throws std::domain_error if eta is outside [0, pi/4] or a gain is negative.
    void validate() const;
    double reflectivity() const { return std::sin(eta) * std::sin(eta); }
};

struct QuadratureVariances {
    double v_plus;
    double v_minus;
};

/// Linear coefficients of an output quadrature over the independent modes
/// v1, v2 (pre-squeezer vacua) and a_in (target). Each contributes unit variance.
struct QuadratureCoefficients {
    double c_v1 = 0.0;
    double c_v2 = 0.0;
    double c_in = 0.0;

    double variance() const noexcept { return c_v1 * c_v1 + c_v2 * c_v2 + c_in * c_in; }
};

struct OutputCoefficients {
    QuadratureCoefficients plus;
    QuadratureCoefficients minus;
};

/// Checks eta in [0, pi/4]; throws std::domain_error otherwise.
void require_eta(double eta);

/// Output quadrature expansions of b_out for arbitrary (eta, g1, g2).
OutputCoefficients output_coefficients_tailored(const SqueezeLevel& sq, const ProtocolSettings& settings);

/// Gain on the amplitude quadrature that keeps the target coefficient at exactly 1.
double g1_of_eta(double eta);

/// Closed-form variances with g1 = g1_of_eta(eta).
QuadratureVariances variances_tailored(const SqueezeLevel& sq, double eta, double g2);

/// argmin over g2 of the phase-quadrature variance.
///
/// The denominator is cos^2(eta) (2G - 1) + sin^2(eta). Note the plus sign:
/// this is the stationary point of V-, and it stays finite at G = 1, eta = pi/4.
double g2_optimal(const SqueezeLevel& sq, double eta);

/// Coefficients of the symmetric-gain 50:50 teleporter (both quadratures alike).
QuadratureCoefficients standard_gain_coefficients(const SqueezeLevel& sq, double g);

/// V+ = V- = 2G - 4g sqrt(G(G-1)) + 2g^2 G - 1.
QuadratureVariances variance_standard_gain(const SqueezeLevel& sq, double g);

}  // namespace cvtailor
