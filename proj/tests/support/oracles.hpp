#pragma once

// Test-only reference computations. Nothing here calls into the code under test
// except where a function name says so.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace cgof::testing {

inline double iw_ref(double x, double gamma) {
    return std::sqrt(std::numbers::pi / gamma) * std::exp(-x * x / (4.0 * gamma));
}

/// Plain enumeration of every index tuple of the three-term expansion.
inline double vstat_bruteforce(const std::vector<double>& y, int a, double gamma) {
    const std::size_t n = y.size();
    const auto total_a = static_cast<std::size_t>(std::pow(n, a));
    std::vector<double> sums(total_a);
    for (std::size_t code = 0; code < total_a; ++code) {
        std::size_t c = code;
        double s = 0.0;
        for (int k = 0; k < a; ++k) {
            s += y[c % n];
            c /= n;
        }
        sums[code] = s;
    }
    long double first = 0.0L, second = 0.0L, third = 0.0L;
    for (double s : sums) {
        for (double t : sums) first += iw_ref(s - t, gamma);
    }
    for (double u : y) {
        for (double v : y) second += iw_ref(a * (u - v), gamma);
    }
    for (double s : sums) {
        for (double v : y) third += iw_ref(s - a * v, gamma);
    }
    const double nd = static_cast<double>(n);
    return static_cast<double>(first / std::pow(nd, 2 * a - 1) + second / nd -
                               2.0L * third / std::pow(nd, a));
}

/// Root of a monotone function on [lo, hi] by plain bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// sup |F_n - F| for a continuous CDF.
inline double ks_distance(std::vector<double> x, const std::function<double(double)>& cdf) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

/// Two-sample KS statistic sup |F_a - F_b|.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    return d;
}

/// Asymptotic one-sample KS critical value c_alpha / sqrt(n).
inline double ks_band(double alpha, std::size_t n) {
    const double c = alpha <= 0.01 ? 1.628 : (alpha <= 0.05 ? 1.358 : 1.224);
    return c / std::sqrt(static_cast<double>(n));
}

inline double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace cgof::testing
