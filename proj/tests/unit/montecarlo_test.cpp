#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cgof/montecarlo.hpp"
#include "cgof/parallel.hpp"
#include "cgof/rng.hpp"

namespace cgof {
namespace {

TEST(StreamSeed, DistinctAcrossDomainsAndIndices) {
    EXPECT_NE(stream_seed(1, 0, 0), stream_seed(1, 0, 1));
    EXPECT_NE(stream_seed(1, 0, 0), stream_seed(1, 1, 0));
    EXPECT_NE(stream_seed(1, 0, 0), stream_seed(2, 0, 0));
    EXPECT_EQ(stream_seed(5, 3, 9), stream_seed(5, 3, 9));
}

TEST(ParallelFor, CoversEveryIndexOnce) {
    std::vector<int> hits(1001, 0);
    parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                     if (i == 6) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

CalibrationSpec small_spec() {
    CalibrationSpec spec;
    spec.n = 20;
    spec.reps = 400;
    spec.levels = {0.05, 0.10};
    spec.seed = 2718;
    return spec;
}

TEST(Calibrate, MonotoneInLevelAndOrderIndex) {
    const CriticalValueTable t = calibrate(small_spec());
    ASSERT_EQ(t.rows.size(), 2U);
    EXPECT_EQ(t.rows[0].order_index, 380U);
    EXPECT_EQ(t.rows[1].order_index, 360U);
    EXPECT_GT(t.at(0.05).critical_value, t.at(0.10).critical_value);
    EXPECT_EQ(t.metadata.seed, 2718U);
    EXPECT_THROW((void)t.at(0.01), DomainError);
}

TEST(Calibrate, IdenticalAcrossRunsAndWorkerCounts) {
    CalibrationSpec spec = small_spec();
    spec.workers = 1;
    const CriticalValueTable a = calibrate(spec);
    spec.workers = 4;
    const CriticalValueTable b = calibrate(spec);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].critical_value, b.rows[i].critical_value);
    }
    spec.seed += 1;
    const CriticalValueTable c = calibrate(spec);
    EXPECT_NE(a.rows[0].critical_value, c.rows[0].critical_value);
}

TEST(Calibrate, BaselineCriticalValues) {
    CalibrationSpec spec = small_spec();
    spec.baselines = true;
    const CriticalValueTable t = calibrate(spec);
    ASSERT_TRUE(t.rows[0].baseline.has_value());
    EXPECT_GT(t.rows[0].baseline->ad, t.rows[1].baseline->ad);
    EXPECT_GE(t.rows[0].baseline->cvm, t.rows[0].baseline->watson);
}

TEST(Calibrate, SpecValidation) {
    CalibrationSpec spec = small_spec();
    spec.reps = 50;
    EXPECT_THROW((void)calibrate(spec), DomainError);
    spec = small_spec();
    spec.levels = {0.10, 0.05};
    EXPECT_THROW((void)calibrate(spec), DomainError);
    spec.levels = {1.5};
    EXPECT_THROW((void)calibrate(spec), DomainError);
}

TEST(McPvalue, BoundaryCases) {
    TestConfig cfg;
    EXPECT_DOUBLE_EQ(mc_pvalue_from_statistic(0.0, 15, cfg, 99, 1), 1.0);
    EXPECT_DOUBLE_EQ(mc_pvalue_from_statistic(std::numeric_limits<double>::max(), 15, cfg, 99, 1),
                     1.0 / 100.0);
    EXPECT_THROW((void)mc_pvalue_from_statistic(1.0, 15, cfg, 50, 1), DomainError);
}

TEST(McPvalue, NormalDataUsuallyRejected) {
    int small = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Sample x = sample(alt::Normal{}, 50, 300 + seed);
        const double p = mc_pvalue(x, TestConfig{}, 199, seed);
        EXPECT_GT(p, 0.0);
        EXPECT_LE(p, 1.0);
        small += p < 0.05 ? 1 : 0;
    }
    EXPECT_GE(small, 8);
}

TEST(PowerStudy, RowsPercentagesAndDeterminism) {
    PowerStudySpec spec;
    spec.n = 20;
    spec.reps = 200;
    spec.calibration_reps = 500;
    spec.level = 0.10;
    spec.seed = 5;
    spec.alternatives = {alt::Cauchy{}, alt::Uniform{}};
    spec.baseline_tests = true;
    const PowerTable a = power_study(spec);
    ASSERT_EQ(a.rows.size(), 2U);
    for (const auto& row : a.rows) {
        EXPECT_GE(row.percent(), 0.0);
        EXPECT_LE(row.percent(), 100.0);
        ASSERT_TRUE(row.baseline.has_value());
    }
    EXPECT_GT(a.rows[1].percent(), 80.0);
    EXPECT_LT(a.rows[0].percent(), 25.0);
    spec.workers = 3;
    const PowerTable b = power_study(spec);
    EXPECT_EQ(a.critical_value, b.critical_value);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].rejections, b.rows[i].rejections);
        EXPECT_EQ(a.rows[i].baseline->ad, b.rows[i].baseline->ad);
    }
}

TEST(PowerStudy, SpecValidation) {
    PowerStudySpec spec;
    EXPECT_THROW((void)power_study(spec), DomainError);  // no alternatives
    spec.alternatives = {alt::Stable{2.5}};
    EXPECT_THROW((void)power_study(spec), DomainError);
    spec.alternatives = {alt::Normal{}};
    spec.level = 0.0;
    EXPECT_THROW((void)power_study(spec), DomainError);
}

}  // namespace
}  // namespace cgof
