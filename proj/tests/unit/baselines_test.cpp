#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cgof/baselines.hpp"
#include "cgof/distributions.hpp"
#include "oracles.hpp"

namespace cgof {
namespace {

PitSample pit(std::vector<double> u) {
    PitSample p;
    p.u = std::move(u);
    return p;
}

TEST(PitTransform, QuartilePoints) {
    CauchyFit fit;
    fit.theta_hat = 3.0;
    fit.lambda_hat = 2.0;
    const PitSample p = pit_transform(Sample(std::vector<double>{5.0, 1.0, 3.0}), fit);
    ASSERT_EQ(p.u.size(), 3U);
    EXPECT_DOUBLE_EQ(p.u[0], 0.25);
    EXPECT_DOUBLE_EQ(p.u[1], 0.5);
    EXPECT_DOUBLE_EQ(p.u[2], 0.75);
    EXPECT_EQ(p.clamped, 0U);
}

TEST(PitTransform, MedianMapsNearHalf) {
    const Sample x(std::vector<double>{-9.0, -2.0, -0.5, 0.0, 0.5, 2.0, 9.0});
    const PitSample p = pit_transform(x, fit_cauchy_ml(x));
    EXPECT_NEAR(p.u[3], 0.5, 1e-12);
}

TEST(PitTransform, ClampsExtremeValues) {
    CauchyFit fit;
    fit.lambda_hat = 1e-300;
    const PitSample p = pit_transform(Sample(std::vector<double>{-1e10, 0.0, 1e10}), fit);
    EXPECT_EQ(p.clamped, 2U);
    EXPECT_GT(p.u.front(), 0.0);
    EXPECT_LT(p.u.back(), 1.0);
    EXPECT_TRUE(std::isfinite(edf_statistics(p).ad));
}

TEST(PitTransform, FittedCauchyIsApproximatelyUniform) {
    const Sample x = sample(alt::Cauchy{CauchyParams{5.0, 2.0}}, 1000, 44);
    const PitSample p = pit_transform(x, fit_cauchy_ml(x));
    EXPECT_TRUE(std::is_sorted(p.u.begin(), p.u.end()));
    EXPECT_LT(testing::ks_distance(p.u, [](double u) { return u; }), testing::ks_band(0.05, 1000));
}

TEST(EdfStatistics, PerfectlySpreadSample) {
    const std::size_t n = 10;
    std::vector<double> u;
    for (std::size_t i = 1; i <= n; ++i) u.push_back((2.0 * i - 1.0) / (2.0 * n));
    const EdfStatistics s = edf_statistics(pit(u));
    EXPECT_NEAR(s.cvm, 1.0 / (12.0 * n), 1e-15);
    EXPECT_NEAR(s.watson, 1.0 / (12.0 * n), 1e-15);
    EXPECT_NEAR(s.ks, 1.0 / (2.0 * n), 1e-15);
}

TEST(EdfStatistics, SingleObservation) {
    EXPECT_DOUBLE_EQ(edf_statistics(pit({0.5})).ks, 0.5);
}

TEST(EdfStatistics, AndersonDarlingTwoPoints) {
    const std::vector<double> u{0.25, 0.75};
    // -n - (1/n) sum (2i-1) [ln u_i + ln(1 - u_{n+1-i})]
    const double oracle =
        -2.0 - 0.5 * (1.0 * (std::log(0.25) + std::log(1.0 - 0.75)) +
                      3.0 * (std::log(0.75) + std::log(1.0 - 0.25)));
    EXPECT_NEAR(edf_statistics(pit(u)).ad, oracle, 1e-14);
    EXPECT_NEAR(oracle, 0.2493400, 1e-6);
}

TEST(EdfStatistics, ReflectionInvarianceAndWatsonBound) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Sample x = sample(alt::StudentT{2.0}, 5 + seed % 40, seed);
        const PitSample p = pit_transform(x, fit_cauchy_ml(x));
        PitSample r;
        for (double u : p.u) r.u.push_back(1.0 - u);
        std::sort(r.u.begin(), r.u.end());
        const EdfStatistics a = edf_statistics(p);
        const EdfStatistics b = edf_statistics(r);
        EXPECT_NEAR(a.ks, b.ks, 1e-12);
        EXPECT_NEAR(a.cvm, b.cvm, 1e-12);
        EXPECT_NEAR(a.ad, b.ad, 1e-10);
        EXPECT_NEAR(a.watson, b.watson, 1e-12);
        EXPECT_LE(a.watson, a.cvm);
        EXPECT_GT(a.cvm, 0.0);
        EXPECT_GT(a.ad, 0.0);
        EXPECT_GT(a.watson, 0.0);
    }
}

TEST(EdfStatistics, AffineInvariantThroughFit) {
    const Sample x = sample(alt::Laplace{}, 40, 8);
    const EdfStatistics a = edf_statistics(x);
    const EdfStatistics b = edf_statistics(x.affine(-7.5, 300.0));
    auto rel = [](double p, double q) { return std::abs(p - q) / std::abs(p); };
    EXPECT_LT(rel(a.ks, b.ks), 1e-9);
    EXPECT_LT(rel(a.cvm, b.cvm), 1e-9);
    EXPECT_LT(rel(a.ad, b.ad), 1e-9);
    EXPECT_LT(rel(a.watson, b.watson), 1e-9);
}

}  // namespace
}  // namespace cgof
