#include "cvtailor/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace cvtailor;

TEST(GaussHermite, ThreePointRule) {
    const auto r = gauss_hermite(3);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    ASSERT_EQ(r.nodes.size(), 3u);
    EXPECT_NEAR(r.nodes[0], -std::sqrt(1.5), 1e-14);
    EXPECT_NEAR(r.nodes[1], 0.0, 1e-14);
    EXPECT_NEAR(r.nodes[2], std::sqrt(1.5), 1e-14);
    EXPECT_NEAR(r.weights[0], sqrt_pi / 6.0, 1e-14);
    EXPECT_NEAR(r.weights[1], 2.0 * sqrt_pi / 3.0, 1e-14);
}

TEST(GaussHermite, ExactForLowDegreeMoments) {
    // int t^(2k) exp(-t^2) dt = Gamma(k + 1/2)
    for (int order : {8, 16, 32, 64, 128}) {
        const auto r = gauss_hermite(order);
        for (int k = 0; k < std::min(order, 8); ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], 2 * k);
            EXPECT_NEAR(sum, std::tgamma(k + 0.5), 1e-12 * std::tgamma(k + 0.5)) << "order " << order << " k " << k;
        }
    }
}

TEST(GaussHermite, NodesAscendingAndSymmetric) {
    const auto r = gauss_hermite(64);
    for (std::size_t i = 1; i < r.nodes.size(); ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        EXPECT_NEAR(r.nodes[i], -r.nodes[r.nodes.size() - 1 - i], 1e-13);
        EXPECT_GT(r.weights[i], 0.0);
    }
    EXPECT_THROW(gauss_hermite(0), std::invalid_argument);
}

TEST(GaussianExpectation2D, GaussianMoments) {
    const auto r = gauss_hermite(16);
    EXPECT_NEAR(gaussian_expectation_2d([](double, double) { return 1.0; }, 0.3, -1.0, 2.0, 0.5, r), 1.0, 1e-14);
    EXPECT_NEAR(gaussian_expectation_2d([](double x, double) { return x; }, 0.3, -1.0, 2.0, 0.5, r), 0.3, 1e-14);
    EXPECT_NEAR(gaussian_expectation_2d([](double x, double y) { return x * x + y * y; }, 0.0, 0.0, 2.0, 0.5, r),
                4.25, 1e-13);
    // E exp(-c x^2) = 1 / sqrt(1 + 2 c s^2)
    EXPECT_NEAR(gaussian_expectation_2d([](double x, double) { return std::exp(-0.7 * x * x); }, 0, 0, 1.1, 1.0,
                                        gauss_hermite(64)),
                1.0 / std::sqrt(1.0 + 2.0 * 0.7 * 1.21), 1e-12);
}
