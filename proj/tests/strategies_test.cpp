#include "cvtailor/strategies.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cvtailor;

TEST(OptimalDisplacement, Limits) {
    const ComplexAmplitude guess{1.5, -0.5};
    const ComplexAmplitude beta{-2.0, 3.0};
    EXPECT_EQ(optimal_displacement(guess, beta, SqueezeLevel::from_lambda(0.0)), guess);
    const auto near_beta = optimal_displacement(guess, beta, SqueezeLevel::from_lambda(1.0 - 1e-9));
    EXPECT_NEAR(near_beta.x, beta.x, 1e-8);
    EXPECT_NEAR(near_beta.y, beta.y, 1e-8);
    const auto mid = optimal_displacement({1.0, 0.0}, {0.5, 0.0}, SqueezeLevel::from_lambda(0.5));
    EXPECT_DOUBLE_EQ(mid.x, 0.75);
    EXPECT_DOUBLE_EQ(mid.y, 0.0);
}

TEST(LineDisplacement, Values) {
    const auto eps = line_displacement({3.0, 4.0}, SqueezeLevel::from_lambda(0.5));
    EXPECT_DOUBLE_EQ(eps.x, 4.0);
    EXPECT_DOUBLE_EQ(eps.y, 2.0);
    const auto guess_only = line_displacement({-1.0, 2.0}, SqueezeLevel::from_lambda(0.0));
    EXPECT_DOUBLE_EQ(guess_only.x, std::sqrt(5.0));
    EXPECT_DOUBLE_EQ(guess_only.y, 0.0);
    const auto on_line = line_displacement({2.0, 0.0}, SqueezeLevel::from_lambda(0.3));
    EXPECT_DOUBLE_EQ(on_line.x, 2.0);
    EXPECT_DOUBLE_EQ(on_line.y, 0.0);
}

TEST(CircleDisplacement, Values) {
    auto r = circle_displacement({0.0, 5.0}, 2.0, SqueezeLevel::from_lambda(0.0));
    EXPECT_NEAR(r.epsilon.x, 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(r.epsilon.y, 2.0);
    EXPECT_FALSE(r.origin_tiebreak);

    const auto beta = ComplexAmplitude::polar(2.0, 0.7);
    r = circle_displacement(beta, 2.0, SqueezeLevel::from_lambda(1.0 - 1e-9));
    EXPECT_NEAR(r.epsilon.x, beta.x, 1e-8);
    EXPECT_NEAR(r.epsilon.y, beta.y, 1e-8);

    r = circle_displacement({3.0, 4.0}, 5.0, SqueezeLevel::from_lambda(0.5));
    EXPECT_NEAR(r.epsilon.x, 3.0, 1e-15);
    EXPECT_NEAR(r.epsilon.y, 4.0, 1e-15);
}

TEST(CircleDisplacement, OriginUsesZeroPhase) {
    const auto r = circle_displacement({0.0, 0.0}, 3.0, SqueezeLevel::from_lambda(0.2));
    EXPECT_TRUE(r.origin_tiebreak);
    EXPECT_DOUBLE_EQ(r.epsilon.x, 0.8 * 3.0);
    EXPECT_DOUBLE_EQ(r.epsilon.y, 0.0);
    EXPECT_THROW(circle_displacement({1.0, 0.0}, -1.0, SqueezeLevel::from_lambda(0.2)), std::domain_error);
}

TEST(StandardDisplacement, Values) {
    EXPECT_EQ(standard_displacement({1.0, 1.0}, 1.0), (ComplexAmplitude{1.0, 1.0}));
    EXPECT_EQ(standard_displacement({-3.0, 7.0}, 0.0), (ComplexAmplitude{0.0, 0.0}));
    EXPECT_EQ(standard_displacement({2.0, -2.0}, 0.5), (ComplexAmplitude{1.0, -1.0}));
    EXPECT_THROW(standard_displacement({1.0, 0.0}, -0.1), std::domain_error);
}

TEST(Strategies, ConvexCombinationOfGuessAndOutcome) {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> l(0.0, 0.999);
    for (int i = 0; i < 500; ++i) {
        const ComplexAmplitude beta{u(rng), u(rng)};
        const double radius = std::abs(u(rng));
        const auto sq = SqueezeLevel::from_lambda(l(rng));
        const double w = sq.lambda();
        const auto line = line_displacement(beta, sq);
        EXPECT_NEAR(line.x, (1 - w) * beta.modulus() + w * beta.x, 1e-12);
        EXPECT_NEAR(line.y, w * beta.y, 1e-12);
        const auto circle = circle_displacement(beta, radius, sq).epsilon;
        EXPECT_NEAR(circle.x, (1 - w) * radius * std::cos(beta.arg()) + w * beta.x, 1e-12);
        EXPECT_NEAR(circle.y, (1 - w) * radius * std::sin(beta.arg()) + w * beta.y, 1e-12);
    }
}

TEST(Strategies, CircleEqualsLineOnPositiveAxis) {
    for (double bx : {0.1, 1.0, 7.5}) {
        for (double l : {0.0, 0.4, 0.9}) {
            const auto sq = SqueezeLevel::from_lambda(l);
            EXPECT_EQ(circle_displacement({bx, 0.0}, bx, sq).epsilon, line_displacement({bx, 0.0}, sq));
        }
    }
}

TEST(Strategies, ArgmaxUnderPerturbation) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> l(0.0, 0.99);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexAmplitude alpha{u(rng), u(rng)};
        const ComplexAmplitude beta{u(rng), u(rng)};
        const auto sq = SqueezeLevel::from_lambda(l(rng));
        const auto eps = optimal_displacement(alpha, beta, sq);
        const double best = one_shot_fidelity(alpha, beta, eps, sq);
        for (int a = -5; a <= 5; ++a) {
            for (int b = -5; b <= 5; ++b) {
                if (a == 0 && b == 0) continue;
                ASSERT_LT(one_shot_fidelity(alpha, beta, {eps.x + 0.1 * a, eps.y + 0.1 * b}, sq), best);
            }
        }
    }
}

TEST(Strategies, DispatchMatchesFreeFunctions) {
    const auto sq = SqueezeLevel::from_lambda(0.6);
    const ComplexAmplitude alpha{2.0, 1.0};
    const ComplexAmplitude beta{1.5, -0.5};
    EXPECT_EQ(displacement(strategy::Standard{0.7}, alpha, beta, sq), standard_displacement(beta, 0.7));
    EXPECT_EQ(displacement(strategy::OptimalKnownTarget{}, alpha, beta, sq), optimal_displacement(alpha, beta, sq));
    EXPECT_EQ(displacement(strategy::LineTailored{}, alpha, beta, sq), line_displacement(beta, sq));
    EXPECT_EQ(displacement(strategy::CircleTailored{2.0}, alpha, beta, sq), circle_displacement(beta, 2.0, sq).epsilon);
    EXPECT_THROW(validate(Strategy{strategy::Standard{-1.0}}), std::domain_error);
    EXPECT_THROW(validate(Strategy{strategy::CircleTailored{-1.0}}), std::domain_error);
}
