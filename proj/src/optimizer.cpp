#include "cvtailor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvtailor/alphabet.hpp"
#include "cvtailor/fidelity.hpp"

namespace cvtailor {

NonFiniteObjective::NonFiniteObjective(double abscissa)
    : std::runtime_error("objective is not finite at x = " + std::to_string(abscissa)), abscissa_(abscissa) {}

namespace {

class CountedObjective {
public:
    explicit CountedObjective(const std::function<double(double)>& f) : f_(f) {}

    double operator()(double x) {
        ++count_;
        const double y = f_(x);
        if (!std::isfinite(y)) throw NonFiniteObjective(x);
        return y;
    }
    std::size_t count() const noexcept { return count_; }

private:
    const std::function<double(double)>& f_;
    std::size_t count_ = 0;
};

struct Point {
    double x;
    double y;
};

Point golden_section(CountedObjective& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - (b - a) * inv_phi;
    double d = a + (b - a) * inv_phi;
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    const Point m{mid, f(mid)};
    Point best = fc >= fd ? Point{c, fc} : Point{d, fd};
    return m.y >= best.y ? m : best;
}

}  // namespace

OptimizationResult maximize_scalar(const std::function<double(double)>& f, double lo, double hi, double tol,
                                   Shape shape) {
    if (!(lo < hi)) throw std::invalid_argument("maximize_scalar needs lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("maximize_scalar needs tol > 0");
    CountedObjective obj(f);

    Point interior{};
    if (shape == Shape::unimodal) {
        interior = golden_section(obj, lo, hi, tol);
    } else {
        constexpr int kGrid = 1024;
        const double h = (hi - lo) / (kGrid - 1);
        int best_i = 0;
        double best_y = -INFINITY;
        for (int i = 0; i < kGrid; ++i) {
            const double y = obj(lo + h * i);
            if (y > best_y) {
                best_y = y;
                best_i = i;
            }
        }
        const double a = std::max(lo, lo + h * (best_i - 1));
        const double b = std::min(hi, lo + h * (best_i + 1));
        interior = golden_section(obj, a, b, tol);
        if (best_y > interior.y) interior = {lo + h * best_i, best_y};
    }

    // Endpoints win ties so boundary optima come back exact.
    Point best = interior;
    for (double x : {0.5 * (lo + hi), hi, lo}) {
        const double y = obj(x);
        if (y >= best.y) best = {x, y};
    }
    return OptimizationResult{.argmax = {best.x}, .value = best.y, .evaluations = obj.count(), .tolerance = tol};
}

OptimizationResult optimize_gain(const SqueezeLevel& sq, double s, double tol) {
    if (!(s > 0.0)) throw std::domain_error("alphabet width must be positive");
    return maximize_scalar([&](double g) { return gaussian_weighted_fidelity(sq, g, s); }, 0.0, kGainMax, tol);
}

double tailored_fidelity(const SqueezeLevel& sq, double eta, double g2) {
    return avg_fidelity_unit_gain(variances_tailored(sq, eta, g2)).value();
}

OptimizationResult optimize_eta_g2(const SqueezeLevel& sq, double tol) {
    auto inner_g2 = [&](double eta) { return std::clamp(g2_optimal(sq, eta), 0.0, kG2Max); };
    auto outer = maximize_scalar([&](double eta) { return tailored_fidelity(sq, eta, inner_g2(eta)); }, 0.0,
                                 kMaxEta, tol);
    const double eta = outer.argmax.front();
    outer.argmax = {eta, inner_g2(eta)};
    return outer;
}

}  // namespace cvtailor
