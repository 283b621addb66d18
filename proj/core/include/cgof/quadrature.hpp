#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace cgof {

/// Nodes and weights of a rule for int f(u) exp(-u^2) du.
struct HermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// N-point Gauss-Hermite rule (physicists' weight exp(-u^2)), computed by Newton
/// iteration on the orthonormal recurrence. Rules are cached per N.
[[nodiscard]] std::shared_ptr<const HermiteRule> gauss_hermite_rule(std::size_t n);

/// Symmetric trapezoid grid u_k = k h, |k| <= half_nodes, for oscillatory
/// integrands of the form sum_S c_S exp(i u S) exp(-u^2) with |S| <= max_frequency.
/// Step and truncation keep aliasing and tail error below exp(-kTrapezoidLogTol).
struct TrapezoidPlan {
    double step = 0.0;
    std::size_t half_nodes = 0;
    bool capped = false;
};

inline constexpr double kTrapezoidLogTol = 40.0;

[[nodiscard]] TrapezoidPlan plan_trapezoid(double max_frequency, std::size_t min_nodes,
                                           std::size_t max_half_nodes);

}  // namespace cgof
