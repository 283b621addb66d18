#include "cgof/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "cgof/error.hpp"

namespace cgof {

namespace {

HermiteRule compute_gauss_hermite(std::size_t n) {
    // Orthonormal Hermite recurrence; initial guesses as in Numerical Recipes gauher.
    HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const std::size_t m = (n + 1) / 2;
    const double nd = static_cast<double>(n);
    double z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(nd, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * nd) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

}  // namespace

std::shared_ptr<const HermiteRule> gauss_hermite_rule(std::size_t n) {
    if (n == 0) throw DomainError("gauss_hermite_rule: need at least one node");
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const HermiteRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const HermiteRule>(compute_gauss_hermite(n));
    return slot;
}

TrapezoidPlan plan_trapezoid(double max_frequency, std::size_t min_nodes,
                             std::size_t max_half_nodes) {
    // Poisson summation: the trapezoid sum picks up the transform at multiples of
    // 2 pi / h. With the Gaussian weight the transform at distance D from the
    // spectrum is ~ exp(-D^2 / 4), so D = 2 sqrt(L) suffices.
    const double log_tol = kTrapezoidLogTol;
    const double cutoff = std::sqrt(log_tol);
    const double step = 2.0 * std::numbers::pi / (std::abs(max_frequency) + 2.0 * cutoff);
    const auto needed = static_cast<std::size_t>(std::ceil(cutoff / step));
    const std::size_t min_half = (min_nodes + 1) / 2;
    TrapezoidPlan plan;
    plan.half_nodes = std::max(needed, min_half);
    if (plan.half_nodes > max_half_nodes) {
        plan.half_nodes = max_half_nodes;
        plan.capped = true;
    }
    plan.step = cutoff / static_cast<double>(plan.half_nodes);
    return plan;
}

}  // namespace cgof
