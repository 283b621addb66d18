#include "cgof/ecf.hpp"

#include <cmath>

#include "cgof/error.hpp"

namespace cgof {

bool is_integer_power(double a) noexcept {
    return a >= 1.0 && a <= 64.0 && std::floor(a) == a;
}

Complex ecf_eval(const Sample& s, double t) {
    double re = 0.0, im = 0.0;
    for (double x : s) {
        re += std::cos(t * x);
        im += std::sin(t * x);
    }
    const double n = static_cast<double>(s.size());
    return {re / n, im / n};
}

Complex complex_pow(Complex z, double a) {
    if (!(a > 0.0)) throw DomainError("complex_pow: exponent must be > 0");
    if (z == Complex{}) return {};
    if (is_integer_power(a)) {
        auto k = static_cast<unsigned>(a);
        Complex result{1.0, 0.0};
        Complex base = z;
        while (k != 0) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k != 0) base *= base;
        }
        return result;
    }
    const double mod = std::pow(std::abs(z), a);
    const double arg = a * std::atan2(z.imag(), z.real());
    return {mod * std::cos(arg), mod * std::sin(arg)};
}

Complex d_n(const Sample& s, double a, double t) {
    return complex_pow(ecf_eval(s, t), a) - ecf_eval(s, a * t);
}

std::vector<Complex> d_n(const Sample& s, double a, std::span<const double> ts) {
    const std::size_t m = ts.size();
    std::vector<double> re1(m, 0.0), im1(m, 0.0), rea(m, 0.0), ima(m, 0.0);
    for (double x : s) {
        for (std::size_t k = 0; k < m; ++k) {
            const double p = ts[k] * x;
            re1[k] += std::cos(p);
            im1[k] += std::sin(p);
            rea[k] += std::cos(a * p);
            ima[k] += std::sin(a * p);
        }
    }
    const double n = static_cast<double>(s.size());
    std::vector<Complex> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        out[k] = complex_pow({re1[k] / n, im1[k] / n}, a) - Complex{rea[k] / n, ima[k] / n};
    }
    return out;
}

}  // namespace cgof
