#include "cgof/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "cgof/distributions.hpp"
#include "cgof/error.hpp"

namespace cgof {

PitSample pit_transform(const Sample& x, const CauchyFit& fit) {
    if (!(fit.lambda_hat > 0.0)) throw DomainError("pit_transform: lambda_hat must be > 0");
    const CauchyParams params{fit.theta_hat, fit.lambda_hat};
    PitSample p;
    p.u.reserve(x.size());
    for (double v : x) {
        double u = cauchy_cdf(v, params);
        if (u < kPitClamp || u > 1.0 - kPitClamp) {
            u = std::clamp(u, kPitClamp, 1.0 - kPitClamp);
            ++p.clamped;
        }
        p.u.push_back(u);
    }
    std::sort(p.u.begin(), p.u.end());
    return p;
}

EdfStatistics edf_statistics(const PitSample& p) {
    const auto& u = p.u;
    const std::size_t n = u.size();
    if (n == 0) throw DomainError("edf_statistics: empty PIT sample");
    const double nd = static_cast<double>(n);
    double d_plus = 0.0, d_minus = 0.0, w2 = 0.0, ad_sum = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double id = static_cast<double>(i + 1);
        d_plus = std::max(d_plus, id / nd - u[i]);
        d_minus = std::max(d_minus, u[i] - (id - 1.0) / nd);
        const double c = u[i] - (2.0 * id - 1.0) / (2.0 * nd);
        w2 += c * c;
        ad_sum += (2.0 * id - 1.0) * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
        mean += u[i];
    }
    mean /= nd;
    EdfStatistics s;
    s.ks = std::max(d_plus, d_minus);
    s.cvm = w2 + 1.0 / (12.0 * nd);
    s.ad = -nd - ad_sum / nd;
    s.watson = s.cvm - nd * (mean - 0.5) * (mean - 0.5);
    return s;
}

EdfStatistics edf_statistics(const Sample& x) {
    return edf_statistics(pit_transform(x, fit_cauchy_ml(x, FitMode::joint)));
}

}  // namespace cgof
