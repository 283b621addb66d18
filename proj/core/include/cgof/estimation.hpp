#pragma once

#include <cstddef>
#include <string_view>

#include "cgof/sample.hpp"

namespace cgof {

enum class FitMode {
    joint,       ///< location and scale
    scale_only,  ///< location fixed at 0
};

/// Which starting point produced the reported optimum.
enum class FitStart {
    median_iqr,
    trimmed_mean_mad,
};

struct CauchyFit {
    double theta_hat = 0.0;
    double lambda_hat = 1.0;
    double log_likelihood = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    FitMode mode = FitMode::joint;
    FitStart start = FitStart::median_iqr;
};

/// Exponent e in Y = X / lambda_hat^e. `full` makes the statistic affine
/// invariant; `square_root` is the literal sqrt-scale reading.
enum class ScalingExponent {
    square_root,
    full,
};

[[nodiscard]] double exponent_value(ScalingExponent e) noexcept;
[[nodiscard]] ScalingExponent exponent_from_value(double e);

[[nodiscard]] std::string_view to_string(FitMode m) noexcept;
[[nodiscard]] std::string_view to_string(FitStart s) noexcept;

/// Cauchy log-likelihood -n log(pi lambda) - sum log(1 + ((x - theta)/lambda)^2).
[[nodiscard]] double cauchy_log_likelihood(const Sample& s, double theta, double lambda);

struct FitOptions {
    std::size_t max_iterations = 200;
    double gradient_tolerance = 1e-10;
};

/// Maximum-likelihood fit. Joint mode needs n >= 3, scale-only n >= 2.
/// Throws DegenerateSampleError when the scale estimate collapses to zero
/// (for instance all observations identical). Failure to converge is reported
/// through `converged == false`.
[[nodiscard]] CauchyFit fit_cauchy_ml(const Sample& s, FitMode mode = FitMode::joint,
                                      const FitOptions& options = {});

/// Y_j = X_j / lambda_hat^e. No location shift.
[[nodiscard]] Sample standardize(const Sample& s, const CauchyFit& fit, ScalingExponent e);

}  // namespace cgof
