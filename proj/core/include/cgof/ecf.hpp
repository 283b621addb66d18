#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cgof/sample.hpp"

namespace cgof {

using Complex = std::complex<double>;

/// True when a is a positive integer small enough for exact repeated
/// multiplication.
[[nodiscard]] bool is_integer_power(double a) noexcept;

/// (1/n) sum_j exp(i t x_j).
[[nodiscard]] Complex ecf_eval(const Sample& s, double t);

/// z^a. Integer a uses binary exponentiation; other a > 0 uses the principal
/// argument |z|^a (cos(a arg z) + i sin(a arg z)), which is discontinuous across
/// the negative real axis. 0^a = 0.
[[nodiscard]] Complex complex_pow(Complex z, double a);

/// phi_n(t)^a - phi_n(a t).
[[nodiscard]] Complex d_n(const Sample& s, double a, double t);

/// d_n at every frequency in `ts`, evaluating phi_n(t) and phi_n(a t) in one
/// pass over the sample.
[[nodiscard]] std::vector<Complex> d_n(const Sample& s, double a, std::span<const double> ts);

}  // namespace cgof
