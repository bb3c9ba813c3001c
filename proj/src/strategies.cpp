#include "cvtailor/strategies.hpp"

#include <stdexcept>

namespace cvtailor {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

void validate(const Strategy& s) {
    std::visit(overloaded{
                   [](const strategy::Standard& st) {
                       if (!(st.gain >= 0.0)) throw std::domain_error("standard gain must be non-negative");
                   },
                   [](const strategy::CircleTailored& c) {
                       if (!(c.radius >= 0.0)) throw std::domain_error("circle radius must be non-negative");
                   },
                   [](const auto&) {},
               },
               s);
}

ComplexAmplitude optimal_displacement(ComplexAmplitude alpha_guess, ComplexAmplitude beta, const SqueezeLevel& sq) {
    const double l = sq.lambda();
    return {(1.0 - l) * alpha_guess.x + l * beta.x, (1.0 - l) * alpha_guess.y + l * beta.y};
}

ComplexAmplitude line_displacement(ComplexAmplitude beta, const SqueezeLevel& sq) {
    return optimal_displacement({beta.modulus(), 0.0}, beta, sq);
}

CircleDisplacement circle_displacement(ComplexAmplitude beta, double radius, const SqueezeLevel& sq) {
    if (!(radius >= 0.0)) throw std::domain_error("circle radius must be non-negative");
    CircleDisplacement out;
    out.origin_tiebreak = beta.x == 0.0 && beta.y == 0.0;
    const double phase = out.origin_tiebreak ? 0.0 : beta.arg();
    out.epsilon = optimal_displacement(ComplexAmplitude::polar(radius, phase), beta, sq);
    return out;
}

ComplexAmplitude standard_displacement(ComplexAmplitude beta, double g) {
    if (!(g >= 0.0)) throw std::domain_error("standard gain must be non-negative");
    return g * beta;
}

ComplexAmplitude displacement(const Strategy& s, ComplexAmplitude alpha, ComplexAmplitude beta,
                              const SqueezeLevel& sq) {
    return std::visit(overloaded{
                          [&](const strategy::Standard& st) { return standard_displacement(beta, st.gain); },
                          [&](const strategy::OptimalKnownTarget&) { return optimal_displacement(alpha, beta, sq); },
                          [&](const strategy::LineTailored&) { return line_displacement(beta, sq); },
                          [&](const strategy::CircleTailored& c) {
                              return circle_displacement(beta, c.radius, sq).epsilon;
                          },
                      },
                      s);
}

}  // namespace cvtailor
