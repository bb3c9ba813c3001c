#include "cvtailor/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace cvtailor;
using std::numbers::pi;
using std::numbers::sqrt2;

TEST(SqueezeLevel, FromGain) {
    EXPECT_EQ(SqueezeLevel::from_gain(1.0).lambda(), 0.0);
    EXPECT_NEAR(SqueezeLevel::from_gain(2.0).lambda(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(SqueezeLevel::from_gain(10.0).lambda(), std::sqrt(0.9), 1e-15);
    EXPECT_NEAR(SqueezeLevel::from_gain(10.0).lambda(), 0.9486833, 1e-7);
}

TEST(SqueezeLevel, FromLambda) {
    EXPECT_EQ(SqueezeLevel::from_lambda(0.0).gain(), 1.0);
    EXPECT_NEAR(SqueezeLevel::from_lambda(0.5).gain(), 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(SqueezeLevel::from_lambda(0.9).gain(), 1.0 / 0.19, 1e-13);
}

TEST(SqueezeLevel, RejectsOutOfDomain) {
    EXPECT_THROW(SqueezeLevel::from_gain(0.999), std::domain_error);
    EXPECT_THROW(SqueezeLevel::from_gain(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    EXPECT_THROW(SqueezeLevel::from_gain(std::numeric_limits<double>::infinity()), std::domain_error);
    EXPECT_THROW(SqueezeLevel::from_lambda(-0.1), std::domain_error);
    EXPECT_THROW(SqueezeLevel::from_lambda(1.0), std::domain_error);
}

TEST(SqueezeLevel, RoundTripAndPairing) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> log_g(0.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
        const double G = std::pow(10.0, log_g(rng));
        const auto sq = SqueezeLevel::from_gain(G);
        const double condition = 2.0 * sq.lambda() * sq.lambda() * G;
        EXPECT_NEAR(SqueezeLevel::from_lambda(sq.lambda()).gain(), G,
                    G * (1e-12 + 4.0 * condition * std::numeric_limits<double>::epsilon()));
        const auto back = SqueezeLevel::from_lambda(sq.lambda() * 0.999);
        EXPECT_NEAR(back.lambda(), std::sqrt((back.gain() - 1.0) / back.gain()), 1e-12);
    }
}

TEST(OutputCoefficients, NoSqueezingTransmissive) {
    const auto c = output_coefficients_tailored(SqueezeLevel::from_gain(1.0), {0.0, 0.5, 0.0});
    EXPECT_DOUBLE_EQ(c.plus.c_v2, 1.0);
    EXPECT_DOUBLE_EQ(c.plus.c_v1, 0.0);
    EXPECT_DOUBLE_EQ(c.plus.c_in, 1.0);
    EXPECT_DOUBLE_EQ(c.plus.variance(), 2.0);
}

TEST(OutputCoefficients, NoSqueezingFiftyFifty) {
    const double eta = pi / 4.0;
    const auto c = output_coefficients_tailored(SqueezeLevel::from_gain(1.0), {eta, 1.0 / (2.0 * std::cos(eta)), 0.0});
    EXPECT_NEAR(c.plus.variance(), 3.0, 1e-14);
}

TEST(OutputCoefficients, UnitGainMatchesStandard) {
    const auto sq = SqueezeLevel::from_gain(4.0 / 3.0);
    const auto c = output_coefficients_tailored(sq, {pi / 4.0, 1.0 / sqrt2, 1.0 / sqrt2});
    const auto standard = variance_standard_gain(sq, 1.0);
    EXPECT_NEAR(c.plus.variance(), standard.v_plus, 1e-14);
    EXPECT_NEAR(c.minus.variance(), standard.v_minus, 1e-14);
}

TEST(OutputCoefficients, RejectsBadSettings) {
    const auto sq = SqueezeLevel::from_gain(2.0);
    EXPECT_THROW(output_coefficients_tailored(sq, {pi / 4.0 + 1e-6, 0.5, 0.5}), std::domain_error);
    EXPECT_THROW(output_coefficients_tailored(sq, {0.1, -0.5, 0.5}), std::domain_error);
    EXPECT_THROW(variances_tailored(sq, -0.01, 0.0), std::domain_error);
}

TEST(VariancesTailored, Limits) {
    auto v = variances_tailored(SqueezeLevel::from_gain(1.0), 0.0, 0.0);
    EXPECT_DOUBLE_EQ(v.v_plus, 2.0);
    EXPECT_DOUBLE_EQ(v.v_minus, 1.0);

    v = variances_tailored(SqueezeLevel::from_gain(1.0), pi / 4.0, 0.0);
    EXPECT_NEAR(v.v_plus, 3.0, 1e-14);
    EXPECT_DOUBLE_EQ(v.v_minus, 1.0);

    const auto big = SqueezeLevel::from_gain(100.0);
    v = variances_tailored(big, pi / 4.0, g2_optimal(big, pi / 4.0));
    EXPECT_NEAR(v.v_plus, 1.0, 0.02);
    EXPECT_NEAR(v.v_minus, 1.0, 0.02);
}

TEST(VariancesTailored, MatchCoefficientOracle) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto sq = SqueezeLevel::from_gain(1.0 + 19.0 * unit(rng));
        const double eta = pi / 4.0 * unit(rng);
        const double g2 = 2.0 * unit(rng);
        const auto oracle = output_coefficients_tailored(sq, {eta, g1_of_eta(eta), g2});
        const auto closed = variances_tailored(sq, eta, g2);
        ASSERT_NEAR(oracle.plus.variance(), closed.v_plus, 1e-12);
        ASSERT_NEAR(oracle.minus.variance(), closed.v_minus, 1e-12);
        EXPECT_GE(closed.v_plus, 1.0 - 1e-12);
    }
}

TEST(G1OfEta, Values) {
    EXPECT_DOUBLE_EQ(g1_of_eta(0.0), 0.5);
    EXPECT_NEAR(g1_of_eta(pi / 4.0), 1.0 / sqrt2, 1e-15);
    EXPECT_NEAR(g1_of_eta(pi / 6.0), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(G1OfEta, GivesUnitTargetCoefficient) {
    const auto sq = SqueezeLevel::from_gain(3.0);
    for (double eta = 0.0; eta <= pi / 4.0; eta += 0.05) {
        const auto c = output_coefficients_tailored(sq, {eta, g1_of_eta(eta), 0.3});
        EXPECT_NEAR(c.plus.c_in, 1.0, 1e-15);
    }
}

TEST(G2Optimal, Limits) {
    for (double eta : {0.0, 0.3, pi / 4.0}) EXPECT_EQ(g2_optimal(SqueezeLevel::from_gain(1.0), eta), 0.0);
    EXPECT_NEAR(g2_optimal(SqueezeLevel::from_gain(1e6), pi / 4.0), 1.0 / sqrt2, 1e-3);
}

TEST(G2Optimal, GainTwoFiftyFifty) {
    const auto sq = SqueezeLevel::from_gain(2.0);
    const double g2 = g2_optimal(sq, pi / 4.0);
    EXPECT_NEAR(g2, 0.5, 1e-14);
    EXPECT_NEAR(variances_tailored(sq, pi / 4.0, g2).v_minus, 1.0, 1e-14);

    // Grid search oracle over [0, 2].
    double best_g2 = 0.0;
    double best_v = INFINITY;
    for (int i = 0; i <= 20000; ++i) {
        const double g = 2.0 * i / 20000.0;
        const double v = variances_tailored(sq, pi / 4.0, g).v_minus;
        if (v < best_v) {
            best_v = v;
            best_g2 = g;
        }
    }
    EXPECT_NEAR(best_g2, 0.5, 1e-4);
}

TEST(G2Optimal, IsGridMinimum) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sq = SqueezeLevel::from_gain(1.0 + 50.0 * unit(rng));
        const double eta = pi / 4.0 * unit(rng);
        const double at_opt = variances_tailored(sq, eta, g2_optimal(sq, eta)).v_minus;
        for (int i = 0; i < 10000; ++i) {
            const double g2 = 4.0 * i / 9999.0;
            ASSERT_LE(at_opt, variances_tailored(sq, eta, g2).v_minus + 1e-12);
        }
    }
}

TEST(VarianceStandardGain, Values) {
    const auto none = SqueezeLevel::from_gain(1.0);
    EXPECT_DOUBLE_EQ(variance_standard_gain(none, 1.0).v_plus, 3.0);
    EXPECT_DOUBLE_EQ(variance_standard_gain(none, 0.0).v_minus, 1.0);
    // 2(4/3) - 4 sqrt(4/9) + 2(4/3) - 1 = 5/3
    const auto v = variance_standard_gain(SqueezeLevel::from_gain(4.0 / 3.0), 1.0);
    EXPECT_NEAR(v.v_plus, 5.0 / 3.0, 1e-14);
    EXPECT_EQ(v.v_plus, v.v_minus);
    EXPECT_THROW(variance_standard_gain(none, -1.0), std::domain_error);
}

TEST(VarianceStandardGain, MatchesCoefficientOracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto sq = SqueezeLevel::from_gain(1.0 + 19.0 * unit(rng));
        const double g = 2.0 * unit(rng);
        ASSERT_NEAR(standard_gain_coefficients(sq, g).variance(), variance_standard_gain(sq, g).v_plus, 1e-12);
    }
}

TEST(VarianceStandardGain, UnitGainDecreasesToVacuum) {
    double previous = INFINITY;
    for (double G = 1.0; G < 1e6; G *= 1.5) {
        const double v = variance_standard_gain(SqueezeLevel::from_gain(G), 1.0).v_plus;
        EXPECT_LT(v, previous);
        EXPECT_GT(v, 1.0);
        previous = v;
    }
    EXPECT_NEAR(previous, 1.0, 1e-5);
}

TEST(Variances, StayAtOrAboveVacuumAtStrongSqueezing) {
    for (double G : {1e4, 1e6, 1e8, 1e10}) {
        const auto sq = SqueezeLevel::from_gain(G);
        const auto v = variances_tailored(sq, kMaxEta, g2_optimal(sq, kMaxEta));
        const double floor = 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
        EXPECT_GE(v.v_plus, floor);
        EXPECT_GE(v.v_minus, floor);
        EXPECT_NEAR(v.v_plus, 1.0, 1.0 / G);
        EXPECT_GE(variance_standard_gain(sq, 1.0).v_plus, 1.0);
    }
}
