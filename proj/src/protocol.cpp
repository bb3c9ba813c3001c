#include "cvtailor/protocol.hpp"

#include <stdexcept>
#include <string>

namespace cvtailor {

SqueezeLevel SqueezeLevel::from_gain(double G) {
    if (!std::isfinite(G) || G < 1.0) {
        throw std::domain_error("parametric gain must be finite and >= 1, got " + std::to_string(G));
    }
    return SqueezeLevel(G, std::sqrt((G - 1.0) / G));
}

SqueezeLevel SqueezeLevel::from_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0)) {
        throw std::domain_error("squeezing parameter must lie in [0, 1), got " + std::to_string(lambda));
    }
    return SqueezeLevel(1.0 / (1.0 - lambda * lambda), lambda);
}

void require_eta(double eta) {
    if (!(eta >= 0.0 && eta <= kMaxEta)) {
        throw std::domain_error("beam-splitter parameter must lie in [0, pi/4], got " + std::to_string(eta));
    }
}

void ProtocolSettings::validate() const {
    require_eta(eta);
    if (!(g1 >= 0.0) || !(g2 >= 0.0)) {
        throw std::domain_error("protocol gains must be non-negative");
    }
}

OutputCoefficients output_coefficients_tailored(const SqueezeLevel& sq, const ProtocolSettings& settings) {
    settings.validate();
    const double rg = std::sqrt(sq.gain());
    const double rg1 = std::sqrt(sq.gain() - 1.0);
    const double c = std::cos(settings.eta);
    const double s = std::sin(settings.eta);

    OutputCoefficients out;
    out.plus.c_v2 = rg - 2.0 * settings.g1 * s * rg1;
    out.plus.c_v1 = rg1 - 2.0 * settings.g1 * s * rg;
    out.plus.c_in = 2.0 * settings.g1 * c;

    out.minus.c_v2 = rg - 2.0 * settings.g2 * c * rg1;
    out.minus.c_v1 = -(rg1 - 2.0 * settings.g2 * c * rg);
    out.minus.c_in = 2.0 * settings.g2 * s;
    return out;
}

double g1_of_eta(double eta) {
    require_eta(eta);
    return 1.0 / (2.0 * std::cos(eta));
}

QuadratureVariances variances_tailored(const SqueezeLevel& sq, double eta, double g2) {
    require_eta(eta);
    if (!(g2 >= 0.0)) throw std::domain_error("g2 must be non-negative");
    const double G = sq.gain();
    const double r = sq.correlation();
    const double t = std::tan(eta);
    const double c = std::cos(eta);
    const double s = std::sin(eta);

    const double a = 2.0 * G - 1.0;
    const double d = c * c * a + s * s;

    // Completed-square forms of the expanded quadratics.
    const double dt = t - 2.0 * r / a;
    const double dg = g2 - c * r / d;
    QuadratureVariances v;
    v.v_plus = 2.0 * G / a + a * dt * dt;
    v.v_minus = (c * c + s * s * a) / d + 4.0 * d * dg * dg;
    return v;
}

double g2_optimal(const SqueezeLevel& sq, double eta) {
    require_eta(eta);
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    return c * sq.correlation() / (c * c * (2.0 * sq.gain() - 1.0) + s * s);
}

QuadratureCoefficients standard_gain_coefficients(const SqueezeLevel& sq, double g) {
    if (!(g >= 0.0)) throw std::domain_error("gain must be non-negative");
    const double rg = std::sqrt(sq.gain());
    const double rg1 = std::sqrt(sq.gain() - 1.0);
    return QuadratureCoefficients{.c_v1 = rg1 - g * rg, .c_v2 = rg - g * rg1, .c_in = -g};
}

QuadratureVariances variance_standard_gain(const SqueezeLevel& sq, double g) {
    if (!(g >= 0.0)) throw std::domain_error("gain must be non-negative");
    const double G = sq.gain();
    const double dg = g - sq.lambda();
    const double v = 1.0 + 2.0 * G * dg * dg;
    return {v, v};
}

}  // namespace cvtailor
