#include "cvtailor/alphabet.hpp"

#include <numbers>
#include <stdexcept>

#include "cvtailor/quadrature.hpp"

namespace cvtailor {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_width(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("alphabet width must be positive and finite");
}
}  // namespace

void validate(const AlphabetDistribution& dist) {
    std::visit(overloaded{
                   [](const alphabet::LineUniform& l) {
                       if (!(l.alpha_max > 0.0)) throw std::domain_error("line alphabet needs alpha_max > 0");
                   },
                   [](const alphabet::Circle& c) {
                       if (!(c.radius >= 0.0)) throw std::domain_error("circle radius must be non-negative");
                   },
                   [](const alphabet::Gaussian2D& g) {
                       require_width(g.s_x);
                       require_width(g.s_y);
                   },
               },
               dist);
}

ComplexAmplitude sample_target(const AlphabetDistribution& dist, std::mt19937_64& rng) {
    return std::visit(overloaded{
                          [&](const alphabet::LineUniform& l) {
                              std::uniform_real_distribution<double> u(0.0, l.alpha_max);
                              return ComplexAmplitude{u(rng), 0.0};
                          },
                          [&](const alphabet::Circle& c) {
                              std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
                              return ComplexAmplitude::polar(c.radius, phase(rng));
                          },
                          [&](const alphabet::Gaussian2D& g) {
                              std::normal_distribution<double> n;
                              const double x = g.s_x * n(rng);
                              const double y = g.s_y * n(rng);
                              return ComplexAmplitude{x, y};
                          },
                      },
                      dist);
}

double gaussian_weighted_fidelity(const SqueezeLevel& sq, double g, double s) {
    require_width(s);
    const double v = variance_standard_gain(sq, g).v_plus;
    const double amplitude = 2.0 / (v + 1.0);
    const double c = 2.0 * (1.0 - g) * (1.0 - g) / (v + 1.0);
    return amplitude / (1.0 + 2.0 * c * s * s);
}

double gaussian_weighted_fidelity_quadrature(const SqueezeLevel& sq, double g, double s_x, double s_y, int order) {
    require_width(s_x);
    require_width(s_y);
    if (order < 16) throw std::invalid_argument("alphabet quadrature order must be >= 16");
    const auto variances = variance_standard_gain(sq, g);
    const auto rule = gauss_hermite(order);
    return gaussian_expectation_2d(
        [&](double ax, double ay) { return avg_fidelity_general_gain(variances, g, {ax, ay}).value(); }, 0.0, 0.0,
        s_x, s_y, rule);
}

}  // namespace cvtailor
