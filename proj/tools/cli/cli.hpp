#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cgof/montecarlo.hpp"

namespace cgof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;

/// Operational failure carrying the process exit code.
class CliError : public std::runtime_error {
public:
    CliError(int exit_code, const std::string& what)
        : std::runtime_error(what), exit_code_(exit_code) {}
    [[nodiscard]] int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

enum class Format { json, csv, markdown };

[[nodiscard]] Format parse_format(std::string_view text);

// ---- input -------------------------------------------------------------

/// One number per line; '#' starts a comment; blank lines are skipped. With a
/// column, lines are CSV records and the column is chosen by header name or
/// 1-based index (a non-numeric first record is treated as a header).
[[nodiscard]] std::vector<double> parse_numbers(std::istream& in,
                                                const std::optional<std::string>& column = {});
[[nodiscard]] std::vector<double> read_numbers(const std::string& path,
                                               const std::optional<std::string>& column = {});

// ---- grammar -----------------------------------------------------------

/// cauchy[:theta,lambda] | t:nu | stable:alpha | tukey:nu | normal | laplace | uniform
[[nodiscard]] AlternativeSpec parse_alternative(std::string_view text);
/// Comma-separated list; numeric tokens after a "cauchy:theta" entry belong to it.
[[nodiscard]] std::vector<AlternativeSpec> parse_alternatives(std::string_view text);
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);
[[nodiscard]] std::vector<std::size_t> parse_count_list(std::string_view text);
[[nodiscard]] Method parse_method(std::string_view text);
[[nodiscard]] QuadratureRule parse_rule(std::string_view text);
[[nodiscard]] FitMode parse_fit_mode(std::string_view text);

// ---- commands ----------------------------------------------------------

struct TestOptions {
    TestConfig cfg;
    double level = 0.05;
    std::optional<std::size_t> pvalue_reps;
    std::size_t calibration_reps = 10000;
    std::uint64_t seed = 1;
    bool baselines = false;
    std::size_t workers = 0;
};

struct BaselineDecision {
    EdfStatistics statistics;
    std::optional<EdfStatistics> critical_values;
};

struct TestReport {
    std::size_t n = 0;
    TestConfig cfg;
    double level = 0.05;
    std::uint64_t seed = 0;
    CauchyFit fit;
    StatisticValue statistic;
    std::optional<double> critical_value;
    std::optional<std::size_t> calibration_reps;
    std::optional<double> p_value;
    std::optional<std::size_t> pvalue_reps;
    bool reject = false;
    /// "critical_value" or "p_value".
    std::string decision_rule;
    std::optional<BaselineDecision> baselines;
    RunMetadata metadata;
};

/// Throws CliError(kExitDegenerate) for n < 3 or a degenerate fit.
[[nodiscard]] TestReport run_test(const std::vector<double>& data, const TestOptions& options);

struct CalibrateOptions {
    std::vector<std::size_t> ns{50};
    TestConfig cfg;
    std::size_t reps = 10000;
    std::vector<double> levels{0.05, 0.10};
    std::uint64_t seed = 1;
    bool baselines = false;
    std::size_t workers = 0;
};

[[nodiscard]] std::vector<CriticalValueTable> run_calibrate(const CalibrateOptions& options);

struct PowerOptions {
    std::vector<std::size_t> ns{20};
    std::vector<AlternativeSpec> alternatives;
    std::vector<double> as{6.0};
    std::vector<double> gammas{2.5};
    TestConfig base_cfg;
    std::size_t reps = 3000;
    std::size_t calibration_reps = 20000;
    double level = 0.10;
    std::uint64_t seed = 1;
    bool baselines = false;
    std::size_t workers = 0;
};

/// One table per (n, gamma, a), gamma-major then a, as in the published layout.
[[nodiscard]] std::vector<PowerTable> run_power(const PowerOptions& options);

struct SampleOptions {
    AlternativeSpec dist;
    std::size_t n = 0;
    std::uint64_t seed = 1;
};

/// One number per line, 17 significant digits.
void run_sample(const SampleOptions& options, std::ostream& out);

// ---- emitters ----------------------------------------------------------

[[nodiscard]] nlohmann::json to_json(const TestConfig& cfg);
[[nodiscard]] nlohmann::json to_json(const RunMetadata& meta);
[[nodiscard]] nlohmann::json to_json(const TestReport& report);
[[nodiscard]] nlohmann::json to_json(const std::vector<CriticalValueTable>& tables);
[[nodiscard]] nlohmann::json to_json(const std::vector<PowerTable>& tables);

void emit(const TestReport& report, Format format, std::ostream& out);
void emit(const std::vector<CriticalValueTable>& tables, Format format, std::ostream& out);
void emit(const std::vector<PowerTable>& tables, Format format, std::ostream& out);

}  // namespace cgof::cli
