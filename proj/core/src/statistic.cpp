#include "cgof/statistic.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cgof/error.hpp"
#include "cgof/quadrature.hpp"

namespace cgof {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

StatisticValue finish(double raw, Method method, const TestConfig& cfg, std::size_t n) {
    StatisticValue v;
    v.method_used = method;
    v.config = cfg;
    v.n = n;
    if (raw < 0.0 && raw >= -kClampWindow) {
        v.delta = 0.0;
        v.clamped = true;
    } else {
        v.delta = raw;
    }
    return v;
}

// Multisets of a indices from {0..n-1}: sum of members and multinomial
// probability a! / (prod m_k!) / n^a.
void enumerate_multisets(std::span<const double> y, int a, std::vector<double>& sums,
                         std::vector<double>& probs) {
    const std::size_t n = y.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(a), 0);
    std::vector<double> factorial(static_cast<std::size_t>(a) + 1, 1.0);
    for (int k = 1; k <= a; ++k) factorial[static_cast<std::size_t>(k)] = factorial[k - 1] * k;
    const double n_pow_a = std::pow(static_cast<double>(n), a);
    while (true) {
        double s = 0.0;
        double denom = 1.0;
        std::size_t run = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            s += y[idx[k]];
            if (k > 0 && idx[k] == idx[k - 1]) {
                ++run;
            } else {
                run = 1;
            }
            denom *= static_cast<double>(run);
        }
        sums.push_back(s);
        probs.push_back(factorial.back() / denom / n_pow_a);

        // Next nondecreasing tuple.
        int pos = a - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
        for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
    }
}

// Trapezoid evaluation of sum_k w_k |phi(t_k)^a - phi(a t_k)|^2 exp(-u_k^2) with
// phase rotators; phases are re-anchored with exact sincos periodically.
struct TrapezoidResult {
    double integral;
    std::size_t nodes;
    bool capped;
};

TrapezoidResult trapezoid_integral(std::span<const double> y_in, double a, double gamma,
                                   std::size_t min_nodes, std::size_t max_half_nodes) {
    const std::size_t n = y_in.size();
    const auto [mn, mx] = std::minmax_element(y_in.begin(), y_in.end());
    const double root_gamma = std::sqrt(gamma);
    const double max_freq = std::abs(a) * (*mx - *mn) / root_gamma;
    const TrapezoidPlan plan = plan_trapezoid(max_freq, min_nodes, max_half_nodes);

    // |d_n|^2 is shift invariant for integer a; centering keeps phases small.
    const double shift = is_integer_power(a) ? 0.5 * (*mx + *mn) : 0.0;
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = (y_in[j] - shift) / root_gamma;

    std::vector<double> c1(n), s1(n), ca(n), sa(n);    // current phases
    std::vector<double> dc1(n), ds1(n), dca(n), dsa(n);  // per-step rotation
    for (std::size_t j = 0; j < n; ++j) {
        dc1[j] = std::cos(plan.step * y[j]);
        ds1[j] = std::sin(plan.step * y[j]);
        dca[j] = std::cos(a * plan.step * y[j]);
        dsa[j] = std::sin(a * plan.step * y[j]);
    }
    constexpr std::size_t kAnchorEvery = 256;
    const double inv_n = 1.0 / static_cast<double>(n);
    CompensatedSum acc;
    for (std::size_t k = 0; k <= plan.half_nodes; ++k) {
        const double u = static_cast<double>(k) * plan.step;
        if (k % kAnchorEvery == 0) {
            for (std::size_t j = 0; j < n; ++j) {
                c1[j] = std::cos(u * y[j]);
                s1[j] = std::sin(u * y[j]);
                ca[j] = std::cos(a * u * y[j]);
                sa[j] = std::sin(a * u * y[j]);
            }
        }
        double r1 = 0.0, i1 = 0.0, ra = 0.0, ia = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            r1 += c1[j];
            i1 += s1[j];
            ra += ca[j];
            ia += sa[j];
        }
        const Complex d = complex_pow({r1 * inv_n, i1 * inv_n}, a) - Complex{ra * inv_n, ia * inv_n};
        const double g = std::norm(d) * std::exp(-u * u);
        acc.add(k == 0 ? g : 2.0 * g);

        if ((k + 1) % kAnchorEvery != 0) {
            for (std::size_t j = 0; j < n; ++j) {
                const double nc1 = c1[j] * dc1[j] - s1[j] * ds1[j];
                s1[j] = c1[j] * ds1[j] + s1[j] * dc1[j];
                c1[j] = nc1;
                const double nca = ca[j] * dca[j] - sa[j] * dsa[j];
                sa[j] = ca[j] * dsa[j] + sa[j] * dca[j];
                ca[j] = nca;
            }
        }
    }
    return {acc.value() * plan.step, 2 * plan.half_nodes + 1, plan.capped};
}

double gauss_hermite_integral(std::span<const double> y, double a, double gamma,
                              std::size_t nodes) {
    const auto rule = gauss_hermite_rule(nodes);
    const double root_gamma = std::sqrt(gamma);
    std::vector<double> ts(rule->nodes.size());
    for (std::size_t k = 0; k < ts.size(); ++k) ts[k] = rule->nodes[k] / root_gamma;
    const auto d = d_n(Sample(std::vector<double>(y.begin(), y.end())), a, ts);
    CompensatedSum acc;
    for (std::size_t k = 0; k < ts.size(); ++k) acc.add(rule->weights[k] * std::norm(d[k]));
    return acc.value();
}

}  // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::vstat: return "vstat";
        case Method::quadrature: return "quadrature";
        case Method::auto_select: return "auto";
    }
    return "?";
}

std::string_view to_string(QuadratureRule r) noexcept {
    return r == QuadratureRule::adaptive_trapezoid ? "adaptive_trapezoid" : "gauss_hermite";
}

void TestConfig::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("TestConfig: a must be > 0");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw DomainError("TestConfig: gamma must be > 0");
    }
    if (quad_nodes < 16) throw DomainError("TestConfig: quad_nodes must be >= 16");
    if (method == Method::vstat && !(is_integer_power(a) && a <= 8.0)) {
        throw DomainError("TestConfig: method=vstat requires an integer a <= 8");
    }
    if (max_half_nodes < quad_nodes) {
        throw DomainError("TestConfig: max_half_nodes must be >= quad_nodes");
    }
}

double iw(double x, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("iw: gamma must be > 0");
    return std::sqrt(std::numbers::pi / gamma) * std::exp(-x * x / (4.0 * gamma));
}

double vstat_tuple_count(std::size_t n, int a) noexcept {
    return std::pow(static_cast<double>(n), 2.0 * a);
}

StatisticValue delta_vstat(const Sample& y, int a, double gamma, double budget) {
    if (a < 1) throw DomainError("delta_vstat: a must be a positive integer");
    if (!(gamma > 0.0)) throw DomainError("delta_vstat: gamma must be > 0");
    const std::size_t n = y.size();
    if (vstat_tuple_count(n, a) > budget) {
        throw CostBudgetError("delta_vstat: n^(2a) = " + std::to_string(vstat_tuple_count(n, a)) +
                              " index tuples exceeds the budget; use the quadrature method");
    }
    const auto values = y.values();
    std::vector<double> sums, probs;
    enumerate_multisets(values, a, sums, probs);
    const double ad = static_cast<double>(a);
    const double nd = static_cast<double>(n);

    // n * E[I_w(S - S')] over independent a-sums.
    CompensatedSum first;
    const double i0 = iw(0.0, gamma);
    for (std::size_t m = 0; m < sums.size(); ++m) {
        first.add(probs[m] * probs[m] * i0);
        for (std::size_t k = m + 1; k < sums.size(); ++k) {
            first.add(2.0 * probs[m] * probs[k] * iw(sums[m] - sums[k], gamma));
        }
    }
    // n * mean over pairs of I_w(a (Y_j - Y_k)).
    CompensatedSum second;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) second.add(iw(ad * (values[j] - values[k]), gamma));
    }
    // n * E[I_w(S - a Y)].
    CompensatedSum third;
    for (std::size_t m = 0; m < sums.size(); ++m) {
        CompensatedSum inner;
        for (std::size_t k = 0; k < n; ++k) inner.add(iw(sums[m] - ad * values[k], gamma));
        third.add(probs[m] * inner.value() / nd);
    }
    const double raw = nd * first.value() + second.value() / nd - 2.0 * nd * third.value();
    TestConfig cfg;
    cfg.a = ad;
    cfg.gamma = gamma;
    cfg.method = Method::vstat;
    cfg.vstat_budget = budget;
    return finish(raw, Method::vstat, cfg, n);
}

StatisticValue delta_quadrature(const Sample& y, const TestConfig& cfg) {
    cfg.validate();
    const double nd = static_cast<double>(y.size());
    const double scale = nd / std::sqrt(cfg.gamma);
    if (cfg.rule == QuadratureRule::gauss_hermite) {
        const double integral = gauss_hermite_integral(y.values(), cfg.a, cfg.gamma, cfg.quad_nodes);
        StatisticValue v = finish(scale * integral, Method::quadrature, cfg, y.size());
        v.nodes_used = cfg.quad_nodes;
        return v;
    }
    const TrapezoidResult r =
        trapezoid_integral(y.values(), cfg.a, cfg.gamma, cfg.quad_nodes, cfg.max_half_nodes);
    StatisticValue v = finish(scale * r.integral, Method::quadrature, cfg, y.size());
    v.nodes_used = r.nodes;
    v.quadrature_capped = r.capped;
    return v;
}

StatisticValue delta_standardized(const Sample& y, const TestConfig& cfg) {
    cfg.validate();
    bool use_vstat = cfg.method == Method::vstat;
    if (cfg.method == Method::auto_select) {
        use_vstat = is_integer_power(cfg.a) && cfg.a <= 8.0 &&
                    vstat_tuple_count(y.size(), static_cast<int>(cfg.a)) <= cfg.vstat_budget;
    }
    if (use_vstat) {
        StatisticValue v = delta_vstat(y, static_cast<int>(cfg.a), cfg.gamma, cfg.vstat_budget);
        v.config = cfg;
        return v;
    }
    return delta_quadrature(y, cfg);
}

double population_delta(const CharacteristicFunction& cf, double a, double gamma) {
    if (!(a > 0.0)) throw DomainError("population_delta: a must be > 0");
    if (!(gamma > 0.0)) throw DomainError("population_delta: gamma must be > 0");
    // |d(-t)| = |d(t)| for the CF of a real random variable. Depth is capped
    // since a vanishing integrand never meets the relative tolerance.
    auto integrand = [&](double t) {
        return std::norm(complex_pow(cf(t), a) - cf(a * t)) * std::exp(-gamma * t * t);
    };
    const double half = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-13);
    return 2.0 * half;
}

FittedStatistic compute_statistic(const Sample& x, const TestConfig& cfg) {
    cfg.validate();
    if (x.size() < 3) throw DegenerateSampleError("compute_statistic: need at least 3 observations");
    FittedStatistic out;
    out.fit = fit_cauchy_ml(x, cfg.fit_mode);
    const Sample y = standardize(x, out.fit, cfg.exponent);
    out.value = delta_standardized(y, cfg);
    return out;
}

}  // namespace cgof
