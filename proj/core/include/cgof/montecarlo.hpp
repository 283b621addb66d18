#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgof/baselines.hpp"
#include "cgof/distributions.hpp"
#include "cgof/statistic.hpp"

namespace cgof {

struct RunMetadata {
    std::string engine;
    std::string engine_version;
    std::string generator;
    std::uint64_t seed = 0;
};

[[nodiscard]] RunMetadata make_metadata(std::uint64_t seed);

struct CalibrationSpec {
    std::size_t n = 50;
    TestConfig cfg;
    std::size_t reps = 10000;
    std::vector<double> levels{0.05, 0.10};
    std::uint64_t seed = 1;
    /// Also compute critical values of the four EDF statistics on the same draws.
    bool baselines = false;
    /// 0 = GOF_THREADS / hardware concurrency.
    std::size_t workers = 0;

    void validate() const;
};

struct CriticalValueRow {
    double level = 0.0;
    double critical_value = 0.0;
    /// 1-based order statistic used, ceil((1 - level) M).
    std::size_t order_index = 0;
    std::optional<EdfStatistics> baseline;
};

struct CriticalValueTable {
    CalibrationSpec spec;
    std::vector<CriticalValueRow> rows;
    RunMetadata metadata;
    std::size_t capped_replicates = 0;
    std::size_t unconverged_fits = 0;

    /// Critical value at `level`; throws DomainError when the level is absent.
    [[nodiscard]] const CriticalValueRow& at(double level) const;
};

/// Per-replicate output of one null draw.
struct NullReplicate {
    double delta = 0.0;
    bool capped = false;
    bool converged = true;
    std::optional<EdfStatistics> edf;
};

/// Standard-Cauchy replicates of size n from stream (seed, domain, r).
[[nodiscard]] std::vector<NullReplicate> simulate_null(std::size_t n, const TestConfig& cfg,
                                                       std::size_t reps, std::uint64_t seed,
                                                       std::uint64_t domain, bool baselines,
                                                       std::size_t workers);

/// Empirical (1 - level) quantiles of the null statistic; replicate r uses
/// sub-stream r of the calibration domain.
[[nodiscard]] CriticalValueTable calibrate(const CalibrationSpec& spec);

/// (1 + #{Delta*_r >= observed}) / (M + 1) with M standard-Cauchy replicates.
[[nodiscard]] double mc_pvalue_from_statistic(double observed, std::size_t n, const TestConfig& cfg,
                                              std::size_t reps, std::uint64_t seed,
                                              std::size_t workers = 0);

/// Fits and evaluates x, then calls mc_pvalue_from_statistic. M >= 99.
[[nodiscard]] double mc_pvalue(const Sample& x, const TestConfig& cfg, std::size_t reps,
                               std::uint64_t seed, std::size_t workers = 0);

struct PowerStudySpec {
    std::size_t n = 20;
    std::vector<AlternativeSpec> alternatives;
    TestConfig cfg;
    std::size_t reps = 3000;
    double level = 0.10;
    std::uint64_t seed = 1;
    bool baseline_tests = false;
    /// Null replicates behind the critical values.
    std::size_t calibration_reps = 20000;
    std::size_t workers = 0;

    void validate() const;
};

struct BaselineRejections {
    std::size_t ks = 0;
    std::size_t cvm = 0;
    std::size_t ad = 0;
    std::size_t watson = 0;
};

struct PowerRow {
    AlternativeSpec alternative;
    std::size_t rejections = 0;
    std::size_t reps = 0;
    std::optional<BaselineRejections> baseline;
    std::size_t capped_replicates = 0;
    std::size_t unconverged_fits = 0;

    /// 100 * rejections / reps.
    [[nodiscard]] double percent() const noexcept;
};

struct PowerTable {
    PowerStudySpec spec;
    double critical_value = 0.0;
    std::optional<EdfStatistics> baseline_critical_values;
    std::vector<PowerRow> rows;
    RunMetadata metadata;
};

/// Calibrates on the calibration stream domain, then rejects Delta > cv on
/// draws from each alternative (alternative i uses domain kAlternativeBase + i).
[[nodiscard]] PowerTable power_study(const PowerStudySpec& spec);

}  // namespace cgof
