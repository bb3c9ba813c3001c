#pragma once

#include <cmath>
#include <complex>

#include "cvtailor/protocol.hpp"

namespace cvtailor {

/// A point in phase space: target amplitude, measurement outcome or displacement.
struct ComplexAmplitude {
    double x = 0.0;
    double y = 0.0;

    double modulus() const noexcept { return std::hypot(x, y); }
    double norm() const noexcept { return x * x + y * y; }
    /// atan2(y, x); 0 at the origin.
    double arg() const noexcept { return std::atan2(y, x); }
    std::complex<double> to_complex() const noexcept { return {x, y}; }
    static ComplexAmplitude polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

    friend ComplexAmplitude operator+(ComplexAmplitude a, ComplexAmplitude b) { return {a.x + b.x, a.y + b.y}; }
    friend ComplexAmplitude operator-(ComplexAmplitude a, ComplexAmplitude b) { return {a.x - b.x, a.y - b.y}; }
    friend ComplexAmplitude operator*(double k, ComplexAmplitude a) { return {k * a.x, k * a.y}; }
    friend bool operator==(ComplexAmplitude, ComplexAmplitude) = default;
};

/// A value in [0, 1]. Overshoot above 1 of at most kOvershoot is clamped;
/// anything further outside the range throws std::domain_error.
class Fidelity {
public:
    static constexpr double kOvershoot = 1e-12;

    explicit Fidelity(double value);
    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

private:
    double value_;
};

/// Conditional fidelity of teleporting |alpha> given outcome beta and Bob's
/// displacement epsilon. The modulus-squared term is evaluated as exp(2 Re z)
/// and all exponents are combined before a single exp.
Fidelity one_shot_fidelity(ComplexAmplitude alpha, ComplexAmplitude beta, ComplexAmplitude epsilon,
                           const SqueezeLevel& sq);

/// 2 / sqrt((V+ + 1)(V- + 1)).
Fidelity avg_fidelity_unit_gain(const QuadratureVariances& v);

/// Average fidelity at arbitrary gain g for target amplitude alpha.
Fidelity avg_fidelity_general_gain(const QuadratureVariances& v, double g, ComplexAmplitude alpha);

/// Classical limit for a symmetric Gaussian alphabet of std dev s:
/// (1 + chi) / (2 + chi) with chi = 1 / (2 s^2).
Fidelity bfk_classical_limit(double s);

}  // namespace cvtailor
