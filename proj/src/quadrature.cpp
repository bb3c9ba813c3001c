#include "cvtailor/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvtailor {

GaussHermiteRule gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Hermite order must be >= 1");
    constexpr double kEps = 1e-14;
    constexpr int kMaxIter = 100;
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const int n = order;
    std::vector<double> x(n), w(n);

    double z = 0.0;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Initial guesses for the largest roots, then extrapolate from the previous two.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * x[1];
        } else {
            z = 2.0 * z - x[i - 2];
        }
        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < kMaxIter; ++it) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= kEps) {
                converged = true;
                break;
            }
        }
        if (!converged) throw std::runtime_error("Gauss-Hermite root failed to converge");
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
    }

    GaussHermiteRule rule;
    rule.nodes.assign(x.rbegin(), x.rend());
    rule.weights.assign(w.rbegin(), w.rend());
    return rule;
}

}  // namespace cvtailor
