#pragma once

#include <cstddef>
#include <vector>

#include "cgof/estimation.hpp"
#include "cgof/sample.hpp"

namespace cgof {

inline constexpr double kPitClamp = 1e-15;

/// Probability-integral transform of a sample under a fitted Cauchy law,
/// sorted ascending, strictly inside (0,1).
struct PitSample {
    std::vector<double> u;
    /// Number of values clamped into [kPitClamp, 1 - kPitClamp].
    std::size_t clamped = 0;
};

struct EdfStatistics {
    double ks = 0.0;      ///< Kolmogorov-Smirnov D
    double cvm = 0.0;     ///< Cramer-von Mises W^2
    double ad = 0.0;      ///< Anderson-Darling A^2
    double watson = 0.0;  ///< Watson U^2
};

/// u_i = F(x_(i); theta_hat, lambda_hat). Requires lambda_hat > 0.
[[nodiscard]] PitSample pit_transform(const Sample& x, const CauchyFit& fit);

/// All four EDF statistics from one pass over the sorted PIT values.
[[nodiscard]] EdfStatistics edf_statistics(const PitSample& p);

/// Fit (joint) then PIT then EDF statistics.
[[nodiscard]] EdfStatistics edf_statistics(const Sample& x);

}  // namespace cgof
