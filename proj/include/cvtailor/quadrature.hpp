#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace cvtailor {

/// Nodes and weights for integrals of f(t) exp(-t^2) over the real line.
struct GaussHermiteRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;
};

/// Newton iteration on the orthonormal Hermite recurrence. Throws
/// std::invalid_argument for order < 1 and std::runtime_error if a root fails
/// to converge.
GaussHermiteRule gauss_hermite(int order);

/// E[f(X, Y)] for independent X ~ N(mx, sx^2), Y ~ N(my, sy^2) via a tensor
/// product Gauss-Hermite rule.
template <class F>
double gaussian_expectation_2d(F&& f, double mx, double my, double sx, double sy, const GaussHermiteRule& rule) {
    const double kx = std::numbers::sqrt2 * sx;
    const double ky = std::numbers::sqrt2 * sy;
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            row += rule.weights[j] * f(mx + kx * rule.nodes[i], my + ky * rule.nodes[j]);
        }
        total += rule.weights[i] * row;
    }
    return total / std::numbers::pi;
}

}  // namespace cvtailor
