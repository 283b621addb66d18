#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "cgof/ecf.hpp"
#include "cgof/estimation.hpp"
#include "cgof/sample.hpp"

namespace cgof {

enum class Method {
    vstat,       ///< exact expanded V-statistic, integer a only
    quadrature,  ///< numerical integral of n |d_n|^2 exp(-gamma t^2)
    auto_select, ///< vstat when n^{2a} fits the tuple budget, else quadrature
};

enum class QuadratureRule {
    /// Trapezoid in u = sqrt(gamma) t with a step sized to the sample's
    /// spectral extent. Accurate for heavy-tailed samples.
    adaptive_trapezoid,
    /// Fixed Gauss-Hermite rule with `quad_nodes` nodes. Only accurate when
    /// a * range(Y) is small.
    gauss_hermite,
};

[[nodiscard]] std::string_view to_string(Method m) noexcept;
[[nodiscard]] std::string_view to_string(QuadratureRule r) noexcept;

inline constexpr double kDefaultVstatBudget = 1e8;
inline constexpr std::size_t kDefaultMaxHalfNodes = std::size_t{1} << 22;
inline constexpr double kClampWindow = 1e-9;

struct TestConfig {
    double a = 6.0;
    double gamma = 2.5;
    ScalingExponent exponent = ScalingExponent::full;
    Method method = Method::auto_select;
    std::size_t quad_nodes = 64;
    QuadratureRule rule = QuadratureRule::adaptive_trapezoid;
    FitMode fit_mode = FitMode::joint;
    double vstat_budget = kDefaultVstatBudget;
    std::size_t max_half_nodes = kDefaultMaxHalfNodes;

    /// Throws DomainError on invalid settings.
    void validate() const;
};

struct StatisticValue {
    double delta = 0.0;
    Method method_used = Method::quadrature;
    TestConfig config;
    std::size_t n = 0;
    /// A slightly negative round-off result was reported as 0.
    bool clamped = false;
    /// Quadrature nodes actually evaluated (full symmetric count), 0 for vstat.
    std::size_t nodes_used = 0;
    /// The trapezoid node cap was hit; the value is approximate.
    bool quadrature_capped = false;
};

/// int cos(t x) exp(-gamma t^2) dt = sqrt(pi/gamma) exp(-x^2 / (4 gamma)).
[[nodiscard]] double iw(double x, double gamma);

/// n^{2a} as a double, the tuple count of the exact formula.
[[nodiscard]] double vstat_tuple_count(std::size_t n, int a) noexcept;

/// Exact V-statistic on already standardized data. Throws CostBudgetError when
/// n^{2a} > budget.
[[nodiscard]] StatisticValue delta_vstat(const Sample& y, int a, double gamma,
                                         double budget = kDefaultVstatBudget);

/// n int |d_n(a,t)|^2 exp(-gamma t^2) dt on already standardized data.
[[nodiscard]] StatisticValue delta_quadrature(const Sample& y, const TestConfig& cfg);

/// Dispatches on cfg.method for already standardized data.
[[nodiscard]] StatisticValue delta_standardized(const Sample& y, const TestConfig& cfg);

using CharacteristicFunction = std::function<Complex(double)>;

/// int |cf(t)^a - cf(a t)|^2 exp(-gamma t^2) dt. Zero exactly for Cauchy CFs.
[[nodiscard]] double population_delta(const CharacteristicFunction& cf, double a, double gamma);

struct FittedStatistic {
    CauchyFit fit;
    StatisticValue value;
};

/// Fit, standardize and evaluate. Needs n >= 3; propagates
/// DegenerateSampleError from the fit.
[[nodiscard]] FittedStatistic compute_statistic(const Sample& x, const TestConfig& cfg = {});

}  // namespace cgof
