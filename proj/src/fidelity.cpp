#include "cvtailor/fidelity.hpp"

#include <stdexcept>
#include <string>

namespace cvtailor {

Fidelity::Fidelity(double value) : value_(value) {
    if (!(value >= -kOvershoot && value <= 1.0 + kOvershoot)) {
        throw std::domain_error("fidelity out of range: " + std::to_string(value));
    }
    if (value_ > 1.0) value_ = 1.0;
    if (value_ < 0.0) value_ = 0.0;
}

Fidelity one_shot_fidelity(ComplexAmplitude alpha, ComplexAmplitude beta, ComplexAmplitude epsilon,
                           const SqueezeLevel& sq) {
    const double lambda = sq.lambda();
    const ComplexAmplitude d = alpha - epsilon;
    const ComplexAmplitude u = alpha - beta;
    // Re[(alpha* - epsilon*)(alpha - beta)] = Re[conj(d) u]
    const double re_z = lambda * (d.x * u.x + d.y * u.y);
    const double exponent = -d.norm() - lambda * lambda * u.norm() + 2.0 * re_z;
    return Fidelity(std::exp(exponent));
}

namespace {

double noise_norm(const QuadratureVariances& v) {
    if (!(v.v_plus > 0.0) || !(v.v_minus > 0.0)) {
        throw std::domain_error("quadrature variances must be positive");
    }
    return std::sqrt((v.v_plus + 1.0) * (v.v_minus + 1.0));
}

}  // namespace

Fidelity avg_fidelity_unit_gain(const QuadratureVariances& v) { return Fidelity(2.0 / noise_norm(v)); }

Fidelity avg_fidelity_general_gain(const QuadratureVariances& v, double g, ComplexAmplitude alpha) {
    if (!(g >= 0.0)) throw std::domain_error("gain must be non-negative");
    const double n = noise_norm(v);
    const double mismatch = (1.0 - g) * (1.0 - g) * alpha.norm();
    return Fidelity(2.0 / n * std::exp(-2.0 * mismatch / n));
}

Fidelity bfk_classical_limit(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::domain_error("alphabet width must be positive, got " + std::to_string(s));
    }
    const double chi = 1.0 / (2.0 * s * s);
    return Fidelity((1.0 + chi) / (2.0 + chi));
}

}  // namespace cvtailor
