#include "cgof/distributions.hpp"

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cgof/error.hpp"

namespace cgof {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt_number(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// Chambers-Mallows-Stuck, beta = 0.
double stable_variate(double alpha, Engine& eng) {
    const double v = kPi * (uniform_open(eng) - 0.5);
    if (alpha == 1.0) return std::tan(v);
    boost::random::exponential_distribution<double> expo(1.0);
    const double w = expo(eng);
    const double cv = std::cos(v);
    return std::sin(alpha * v) / std::pow(cv, 1.0 / alpha) *
           std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
}

}  // namespace

CauchyParams CauchyParams::make(double theta, double lambda) {
    if (!std::isfinite(theta)) throw DomainError("CauchyParams: theta must be finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("CauchyParams: lambda must be finite and > 0");
    }
    return CauchyParams{theta, lambda};
}

double cauchy_pdf(double x, const CauchyParams& p) noexcept {
    const double z = (x - p.theta) / p.lambda;
    return 1.0 / (kPi * p.lambda * (1.0 + z * z));
}

double cauchy_cdf(double x, const CauchyParams& p) noexcept {
    return 0.5 + std::atan((x - p.theta) / p.lambda) / kPi;
}

double cauchy_quantile(double u, const CauchyParams& p) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("cauchy_quantile: u must lie in (0,1)");
    return p.theta + p.lambda * std::tan(kPi * (u - 0.5));
}

void validate(const AlternativeSpec& spec) {
    std::visit(Overloaded{
                   [](const alt::Cauchy& c) { (void)CauchyParams::make(c.params.theta, c.params.lambda); },
                   [](const alt::StudentT& t) {
                       if (!(t.nu > 0.0) || !std::isfinite(t.nu)) {
                           throw DomainError("t: degrees of freedom must be > 0");
                       }
                   },
                   [](const alt::Stable& s) {
                       if (!(s.alpha > 0.0 && s.alpha <= 2.0)) {
                           throw DomainError("stable: alpha must lie in (0,2]");
                       }
                   },
                   [](const alt::Tukey& t) {
                       if (!(t.nu >= 0.0) || !std::isfinite(t.nu)) {
                           throw DomainError("tukey: nu must be >= 0");
                       }
                   },
                   [](const auto&) {},
               },
               spec);
}

std::string to_string(const AlternativeSpec& spec) {
    return std::visit(
        Overloaded{
            [](const alt::Cauchy& c) {
                if (c.params == CauchyParams{}) return std::string("cauchy");
                return "cauchy:" + fmt_number(c.params.theta) + "," + fmt_number(c.params.lambda);
            },
            [](const alt::StudentT& t) { return "t:" + fmt_number(t.nu); },
            [](const alt::Stable& s) { return "stable:" + fmt_number(s.alpha); },
            [](const alt::Tukey& t) { return "tukey:" + fmt_number(t.nu); },
            [](const alt::Normal&) { return std::string("normal"); },
            [](const alt::Laplace&) { return std::string("laplace"); },
            [](const alt::Uniform&) { return std::string("uniform"); },
        },
        spec);
}

std::string display_label(const AlternativeSpec& spec) {
    return std::visit(
        Overloaded{
            [](const alt::Cauchy& c) {
                return "C(" + fmt_number(c.params.theta) + "," + fmt_number(c.params.lambda) + ")";
            },
            [](const alt::StudentT& t) { return "t_" + fmt_number(t.nu); },
            [](const alt::Stable& s) { return "S_" + fmt_number(s.alpha); },
            [](const alt::Tukey& t) { return "Tuk_" + fmt_number(t.nu); },
            [](const alt::Normal&) { return std::string("N(0,1)"); },
            [](const alt::Laplace&) { return std::string("Lap"); },
            [](const alt::Uniform&) { return std::string("U(0,1)"); },
        },
        spec);
}

void draw(const AlternativeSpec& spec, std::size_t n, Engine& eng, std::vector<double>& out) {
    out.resize(n);
    std::visit(Overloaded{
                   [&](const alt::Cauchy& c) {
                       for (auto& v : out) v = cauchy_quantile(uniform_open(eng), c.params);
                   },
                   [&](const alt::StudentT& t) {
                       boost::random::normal_distribution<double> normal;
                       boost::random::gamma_distribution<double> gamma(t.nu / 2.0, 2.0);
                       for (auto& v : out) {
                           const double z = normal(eng);
                           const double chi2 = gamma(eng);
                           v = z / std::sqrt(chi2 / t.nu);
                       }
                   },
                   [&](const alt::Stable& s) {
                       for (auto& v : out) v = stable_variate(s.alpha, eng);
                   },
                   [&](const alt::Tukey& t) {
                       boost::random::normal_distribution<double> normal;
                       for (auto& v : out) {
                           const double z = normal(eng);
                           v = z * std::exp(t.nu * z * z / 2.0);
                       }
                   },
                   [&](const alt::Normal&) {
                       boost::random::normal_distribution<double> normal;
                       for (auto& v : out) v = normal(eng);
                   },
                   [&](const alt::Laplace&) {
                       boost::random::exponential_distribution<double> expo(1.0);
                       for (auto& v : out) {
                           const double e = expo(eng);
                           v = uniform_open(eng) < 0.5 ? -e : e;
                       }
                   },
                   [&](const alt::Uniform&) {
                       for (auto& v : out) v = uniform_open(eng);
                   },
               },
               spec);
}

Sample sample(const AlternativeSpec& spec, std::size_t n, std::uint64_t seed) {
    validate(spec);
    if (n == 0) throw DomainError("sample: n must be >= 1");
    Engine eng = make_engine(stream_seed(seed, stream_domain::kDirect, 0));
    std::vector<double> values;
    draw(spec, n, eng, values);
    return Sample(std::move(values));
}

}  // namespace cgof
