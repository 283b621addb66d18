#include "cgof/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cgof/error.hpp"

namespace cgof {

namespace {

// Linear-interpolated quantile of sorted data (type 7).
double sorted_quantile(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct Derivatives {
    double loglik;
    double g_theta;  // d l / d theta
    double g_s;      // d l / d log(lambda)
    double h_tt;
    double h_ts;
    double h_ss;
};

Derivatives derivatives(std::span<const double> x, double theta, double lambda) {
    const double l2 = lambda * lambda;
    double sum_log = 0.0, s_r = 0.0, s_r2 = 0.0, s_tt = 0.0, s_ts = 0.0, s_ss = 0.0;
    for (double xi : x) {
        const double r = xi - theta;
        const double d = l2 + r * r;
        const double d2 = d * d;
        sum_log += std::log1p((r / lambda) * (r / lambda));
        s_r += r / d;
        s_r2 += r * r / d;
        s_tt += (r * r - l2) / d2;
        s_ts += r / d2;
        s_ss += r * r / d2;
    }
    const double n = static_cast<double>(x.size());
    return Derivatives{
        -n * std::log(std::numbers::pi * lambda) - sum_log,
        2.0 * s_r,
        -n + 2.0 * s_r2,
        2.0 * s_tt,
        -4.0 * l2 * s_ts,
        -4.0 * l2 * s_ss,
    };
}

double score_norm(const Derivatives& d, double lambda) {
    return std::hypot(d.g_theta * lambda, d.g_s);
}

// Higher likelihood, or equal within rounding with a smaller scaled score.
bool improves(const Derivatives& next, double next_lambda, const Derivatives& cur,
              double cur_lambda) {
    if (next.loglik > cur.loglik) return true;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(cur.loglik));
    return next.loglik >= cur.loglik - noise &&
           score_norm(next, next_lambda) < score_norm(cur, cur_lambda);
}

struct RunResult {
    double theta;
    double lambda;
    double loglik;
    std::size_t iterations;
    bool converged;
};

// Safeguarded Newton in (theta, log lambda). Each accepted step must increase the
// likelihood; when Newton cannot, fall back to a bisection on each score
// coordinate in turn.
RunResult newton_joint(std::span<const double> x, double theta, double lambda,
                       const FitOptions& opt) {
    const double n = static_cast<double>(x.size());
    double s = std::log(lambda);
    Derivatives d = derivatives(x, theta, lambda);
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        const double lam = std::exp(s);
        // Scale-free gradient: theta score times lambda, log-lambda score.
        const double gt_scaled = d.g_theta * lam;
        if (std::abs(gt_scaled) <= opt.gradient_tolerance * n &&
            std::abs(d.g_s) <= opt.gradient_tolerance * n) {
            return {theta, lam, d.loglik, it, true};
        }

        double step_t = 0.0, step_s = 0.0;
        const double det = d.h_tt * d.h_ss - d.h_ts * d.h_ts;
        if (d.h_tt < 0.0 && det > 0.0) {
            step_t = -(d.h_ss * d.g_theta - d.h_ts * d.g_s) / det;
            step_s = -(-d.h_ts * d.g_theta + d.h_tt * d.g_s) / det;
        } else {
            // Not locally concave: scaled gradient ascent.
            step_t = lam * gt_scaled / n;
            step_s = d.g_s / n;
        }
        // Keep steps on the data scale.
        const double max_t = 10.0 * lam;
        if (std::abs(step_t) > max_t) {
            const double f = max_t / std::abs(step_t);
            step_t *= f;
            step_s *= f;
        }
        if (std::abs(step_s) > 2.0) {
            const double f = 2.0 / std::abs(step_s);
            step_t *= f;
            step_s *= f;
        }

        bool accepted = false;
        for (int halving = 0; halving < 60; ++halving) {
            const double nt = theta + step_t;
            const double ns = s + step_s;
            const Derivatives nd = derivatives(x, nt, std::exp(ns));
            if (improves(nd, std::exp(ns), d, std::exp(s))) {
                const bool moved = nt != theta || ns != s;
                theta = nt;
                s = ns;
                d = nd;
                accepted = moved;
                break;
            }
            step_t *= 0.5;
            step_s *= 0.5;
        }
        if (!accepted) {
            // Coordinate bisection on the two score equations.
            auto bisect = [](auto&& f, double lo, double hi) {
                double flo = f(lo);
                for (int k = 0; k < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++k) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid);
                    if ((fm > 0.0) == (flo > 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                return 0.5 * (lo + hi);
            };
            const double lam_now = std::exp(s);
            const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
            theta = bisect([&](double t) { return derivatives(x, t, lam_now).g_theta; }, *mn, *mx);
            s = bisect([&](double ls) { return derivatives(x, theta, std::exp(ls)).g_s; },
                       s - 40.0, s + 40.0);
            const Derivatives nd = derivatives(x, theta, std::exp(s));
            if (!improves(nd, std::exp(s), d, lam_now) && nd.loglik < d.loglik) {
                return {theta, std::exp(s), nd.loglik, it + 1, false};
            }
            d = nd;
        }
        if (!std::isfinite(s) || std::exp(s) <= 0.0) break;
    }
    const double lam = std::exp(s);
    const bool ok = std::abs(d.g_theta * lam) <= opt.gradient_tolerance * n &&
                    std::abs(d.g_s) <= opt.gradient_tolerance * n;
    return {theta, lam, d.loglik, opt.max_iterations, ok};
}

// With theta fixed at 0 the log-lambda score sum x^2/(l^2+x^2) - n/2 is strictly
// decreasing in lambda, so Newton safeguarded by a bracket finds the root.
RunResult newton_scale(std::span<const double> x, double lambda, const FitOptions& opt) {
    const double n = static_cast<double>(x.size());
    double lo = std::log(lambda) - 1.0, hi = std::log(lambda) + 1.0;
    auto score = [&](double ls) { return derivatives(x, 0.0, std::exp(ls)).g_s; };
    while (score(lo) < 0.0) lo -= 2.0;
    while (score(hi) > 0.0) hi += 2.0;
    double s = std::clamp(std::log(lambda), lo, hi);
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        const Derivatives d = derivatives(x, 0.0, std::exp(s));
        if (std::abs(d.g_s) <= opt.gradient_tolerance * n) {
            return {0.0, std::exp(s), d.loglik, it, true};
        }
        if (d.g_s > 0.0) lo = s; else hi = s;
        double next = s - d.g_s / d.h_ss;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == s) break;
        s = next;
    }
    const Derivatives d = derivatives(x, 0.0, std::exp(s));
    return {0.0, std::exp(s), d.loglik, opt.max_iterations,
            std::abs(d.g_s) <= opt.gradient_tolerance * n};
}

// The likelihood is unbounded as lambda -> 0 exactly when more than half of the
// observations sit at one point (at 0 when theta is fixed).
void check_nondegenerate(const std::vector<double>& sorted, FitMode mode) {
    const std::size_t n = sorted.size();
    std::size_t most = 0;
    if (mode == FitMode::joint) {
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && sorted[j] == sorted[i]) ++j;
            most = std::max(most, j - i);
            i = j;
        }
    } else {
        most = static_cast<std::size_t>(std::count(sorted.begin(), sorted.end(), 0.0));
    }
    if (2 * most > n) {
        throw DegenerateSampleError(
            "fit_cauchy_ml: more than half of the observations coincide; scale estimate is 0");
    }
}

}  // namespace

double exponent_value(ScalingExponent e) noexcept {
    return e == ScalingExponent::full ? 1.0 : 0.5;
}

ScalingExponent exponent_from_value(double e) {
    if (e == 1.0) return ScalingExponent::full;
    if (e == 0.5) return ScalingExponent::square_root;
    throw DomainError("scaling exponent must be 0.5 or 1.0");
}

std::string_view to_string(FitMode m) noexcept {
    return m == FitMode::joint ? "joint" : "scale_only";
}

std::string_view to_string(FitStart s) noexcept {
    return s == FitStart::median_iqr ? "median_iqr" : "trimmed_mean_mad";
}

double cauchy_log_likelihood(const Sample& s, double theta, double lambda) {
    return derivatives(s.values(), theta, lambda).loglik;
}

CauchyFit fit_cauchy_ml(const Sample& s, FitMode mode, const FitOptions& options) {
    const std::size_t n = s.size();
    if (mode == FitMode::joint && n < 3) {
        throw DegenerateSampleError("fit_cauchy_ml: joint fit needs at least 3 observations");
    }
    if (mode == FitMode::scale_only && n < 2) {
        throw DegenerateSampleError("fit_cauchy_ml: scale-only fit needs at least 2 observations");
    }
    std::vector<double> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    check_nondegenerate(sorted, mode);

    const double median = sorted_quantile(sorted, 0.5);
    double half_iqr = 0.5 * (sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25));

    std::vector<double> dev(n);
    const double center = mode == FitMode::joint ? median : 0.0;
    for (std::size_t i = 0; i < n; ++i) dev[i] = std::abs(sorted[i] - center);
    std::sort(dev.begin(), dev.end());
    const double mad = sorted_quantile(dev, 0.5);
    // Smallest positive spread, used when quartile-based starts are 0.
    double min_gap = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double g = sorted[i] - sorted[i - 1];
        if (g > 0.0 && (min_gap == 0.0 || g < min_gap)) min_gap = g;
    }
    if (mode == FitMode::scale_only) {
        half_iqr = sorted_quantile(dev, 0.5);
        for (double v : dev) {
            if (v > 0.0 && (min_gap == 0.0 || v < min_gap)) min_gap = v;
        }
    }
    auto positive_or = [&](double v) { return v > 0.0 ? v : min_gap; };

    if (mode == FitMode::scale_only) {
        const RunResult r = newton_scale(s.values(), positive_or(half_iqr), options);
        if (!(r.lambda > 0.0)) throw DegenerateSampleError("fit_cauchy_ml: scale estimate is 0");
        return {0.0, r.lambda, r.loglik, r.iterations, r.converged, mode, FitStart::median_iqr};
    }

    RunResult best = newton_joint(s.values(), median, positive_or(half_iqr), options);
    FitStart start = FitStart::median_iqr;
    if (!best.converged) {
        // 25% trimmed mean and MAD.
        const std::size_t cut = n / 4;
        double acc = 0.0;
        for (std::size_t i = cut; i < n - cut; ++i) acc += sorted[i];
        const double tmean = acc / static_cast<double>(n - 2 * cut);
        const RunResult alt = newton_joint(s.values(), tmean, positive_or(mad), options);
        if ((alt.converged && !best.converged) ||
            (alt.converged == best.converged && alt.loglik > best.loglik)) {
            best = alt;
            start = FitStart::trimmed_mean_mad;
        }
    }
    if (!(best.lambda > 0.0) || !std::isfinite(best.lambda)) {
        throw DegenerateSampleError("fit_cauchy_ml: scale estimate collapsed to 0");
    }
    return {best.theta, best.lambda, best.loglik, best.iterations, best.converged, mode, start};
}

Sample standardize(const Sample& s, const CauchyFit& fit, ScalingExponent e) {
    if (!(fit.lambda_hat > 0.0)) throw DomainError("standardize: lambda_hat must be > 0");
    const double divisor =
        e == ScalingExponent::full ? fit.lambda_hat : std::sqrt(fit.lambda_hat);
    std::vector<double> y(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) y[i] = s[i] / divisor;
    return Sample(std::move(y));
}

}  // namespace cgof
