#include <charconv>
#include <cmath>

#include "cli/cli.hpp"

namespace cgof::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            std::string_view token = text.substr(start, i - start);
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            out.push_back(token);
            start = i + 1;
        }
    }
    return out;
}

std::optional<double> number(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

double require_number(std::string_view s, std::string_view what) {
    if (auto v = number(s)) return *v;
    throw CliError(kExitUsage, "invalid " + std::string(what) + ": '" + std::string(s) + "'");
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "markdown" || text == "md") return Format::markdown;
    throw CliError(kExitUsage, "unknown format '" + std::string(text) + "'");
}

AlternativeSpec parse_alternative(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const bool has_args = colon != std::string_view::npos;
    AlternativeSpec spec;
    if (name == "cauchy") {
        if (!has_args) {
            spec = alt::Cauchy{};
        } else {
            const auto parts = split(args, ',');
            if (parts.size() != 2) throw CliError(kExitUsage, "cauchy expects cauchy:theta,lambda");
            spec = alt::Cauchy{CauchyParams{require_number(parts[0], "theta"),
                                            require_number(parts[1], "lambda")}};
        }
    } else if (name == "t" || name == "stable" || name == "tukey") {
        if (!has_args) throw CliError(kExitUsage, std::string(name) + " expects a parameter");
        const double v = require_number(args, "parameter");
        if (name == "t") spec = alt::StudentT{v};
        else if (name == "stable") spec = alt::Stable{v};
        else spec = alt::Tukey{v};
    } else if ((name == "normal" || name == "laplace" || name == "uniform") && !has_args) {
        if (name == "normal") spec = alt::Normal{};
        else if (name == "laplace") spec = alt::Laplace{};
        else spec = alt::Uniform{};
    } else {
        throw CliError(kExitUsage, "unknown distribution '" + std::string(text) + "'");
    }
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw CliError(kExitUsage, e.what());
    }
    return spec;
}

std::vector<AlternativeSpec> parse_alternatives(std::string_view text) {
    const auto tokens = split(text, ',');
    std::vector<AlternativeSpec> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string token(tokens[i]);
        if (token.rfind("cauchy:", 0) == 0 && i + 1 < tokens.size() && number(tokens[i + 1])) {
            token += ",";
            token += tokens[++i];
        }
        if (token.empty()) throw CliError(kExitUsage, "empty entry in distribution list");
        out.push_back(parse_alternative(token));
    }
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto token : split(text, ',')) out.push_back(require_number(token, "number"));
    if (out.empty()) throw CliError(kExitUsage, "empty list");
    return out;
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (double v : parse_real_list(text)) {
        if (v < 1 || v != std::floor(v)) throw CliError(kExitUsage, "expected positive integers");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

Method parse_method(std::string_view text) {
    if (text == "vstat") return Method::vstat;
    if (text == "quadrature") return Method::quadrature;
    if (text == "auto") return Method::auto_select;
    throw CliError(kExitUsage, "unknown method '" + std::string(text) + "'");
}

QuadratureRule parse_rule(std::string_view text) {
    if (text == "trapezoid" || text == "adaptive_trapezoid") return QuadratureRule::adaptive_trapezoid;
    if (text == "gauss-hermite" || text == "gauss_hermite") return QuadratureRule::gauss_hermite;
    throw CliError(kExitUsage, "unknown quadrature rule '" + std::string(text) + "'");
}

FitMode parse_fit_mode(std::string_view text) {
    if (text == "joint") return FitMode::joint;
    if (text == "scale-only" || text == "scale_only") return FitMode::scale_only;
    throw CliError(kExitUsage, "unknown fit mode '" + std::string(text) + "'");
}

}  // namespace cgof::cli
