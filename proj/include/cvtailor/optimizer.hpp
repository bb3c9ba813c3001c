#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cvtailor/protocol.hpp"

namespace cvtailor {

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kGainMax = 2.0;
inline constexpr double kG2Max = 2.0;

struct OptimizationResult {
    std::vector<double> argmax;
    double value = 0.0;
    std::size_t evaluations = 0;
    double tolerance = 0.0;
};

/// Raised when the objective returns NaN or an infinity.
class NonFiniteObjective : public std::runtime_error {
public:
    explicit NonFiniteObjective(double abscissa);
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

enum class Shape {
    unimodal,  // golden-section search on [lo, hi]
    unknown,   // 1024-point grid, then golden-section refinement around the best cell
};

/// Maximises f over [lo, hi]. The endpoints and the midpoint are always
/// candidates, so boundary optima are returned exactly.
OptimizationResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi, double tol,
                                   Shape shape = Shape::unimodal);

/// max over g in [0, 2] of the Gaussian-alphabet weighted fidelity. argmax = {g}.
OptimizationResult optimize_gain(const SqueezeLevel& sq, double s, double tol = kDefaultTolerance);

/// Tailored measurement and displacement: max over eta in [0, pi/4] with g2
/// solved exactly at each eta. argmax = {eta, g2}.
OptimizationResult optimize_eta_g2(const SqueezeLevel& sq, double tol = kDefaultTolerance);

/// Unit-gain fidelity for the tailored protocol at (eta, g2).
double tailored_fidelity(const SqueezeLevel& sq, double eta, double g2);

}  // namespace cvtailor
