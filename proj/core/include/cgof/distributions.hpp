#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cgof/rng.hpp"
#include "cgof/sample.hpp"

namespace cgof {

/// Location/scale of a Cauchy law. Construct through `make` to validate.
struct CauchyParams {
    double theta = 0.0;
    double lambda = 1.0;

    [[nodiscard]] static CauchyParams make(double theta, double lambda);
    friend bool operator==(const CauchyParams&, const CauchyParams&) = default;
};

[[nodiscard]] double cauchy_pdf(double x, const CauchyParams& p) noexcept;
[[nodiscard]] double cauchy_cdf(double x, const CauchyParams& p) noexcept;
/// Analytic inverse of the CDF; throws DomainError unless 0 < u < 1.
[[nodiscard]] double cauchy_quantile(double u, const CauchyParams& p);

namespace alt {
struct Cauchy {
    CauchyParams params;
    friend bool operator==(const Cauchy&, const Cauchy&) = default;
};
struct StudentT {
    double nu;
    friend bool operator==(const StudentT&, const StudentT&) = default;
};
/// Symmetric alpha-stable S(alpha, 0, 0, 1); alpha = 1 is exactly C(0,1).
struct Stable {
    double alpha;
    friend bool operator==(const Stable&, const Stable&) = default;
};
/// Z * exp(nu Z^2 / 2), Z standard normal.
struct Tukey {
    double nu;
    friend bool operator==(const Tukey&, const Tukey&) = default;
};
struct Normal {
    friend bool operator==(const Normal&, const Normal&) = default;
};
/// Density exp(-|x|)/2.
struct Laplace {
    friend bool operator==(const Laplace&, const Laplace&) = default;
};
/// Uniform on (0,1).
struct Uniform {
    friend bool operator==(const Uniform&, const Uniform&) = default;
};
}  // namespace alt

using AlternativeSpec =
    std::variant<alt::Cauchy, alt::StudentT, alt::Stable, alt::Tukey, alt::Normal, alt::Laplace,
                 alt::Uniform>;

/// Throws DomainError when a parameter is out of range.
void validate(const AlternativeSpec& spec);

/// Canonical grammar form, e.g. "t:4", "stable:1.5", "cauchy:0,1".
[[nodiscard]] std::string to_string(const AlternativeSpec& spec);

/// Short label in the style of the power tables, e.g. "t_4", "S_1.5", "N(0,1)".
[[nodiscard]] std::string display_label(const AlternativeSpec& spec);

/// Draws n variates from `eng`. `out` is resized to n.
void draw(const AlternativeSpec& spec, std::size_t n, Engine& eng, std::vector<double>& out);

/// Deterministic in (spec, n, seed).
[[nodiscard]] Sample sample(const AlternativeSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace cgof
