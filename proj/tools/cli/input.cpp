#include <cctype>
#include <cmath>
#include <iostream>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

namespace cgof::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            std::string_view field = trim(line.substr(start, i - start));
            if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
                field = field.substr(1, field.size() - 2);
            }
            out.push_back(field);
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

std::vector<double> parse_numbers(std::istream& in, const std::optional<std::string>& column) {
    std::vector<double> values;
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> col_index;
    if (column) {
        if (auto idx = to_double(*column); idx && *idx >= 1 && *idx == std::floor(*idx)) {
            col_index = static_cast<std::size_t>(*idx) - 1;
        }
    }
    bool first_record = true;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        if (!column) {
            const auto v = to_double(line);
            if (!v || !std::isfinite(*v)) {
                throw CliError(kExitUsage, "line " + std::to_string(line_no) +
                                               ": not a finite number: '" + std::string(line) + "'");
            }
            values.push_back(*v);
            continue;
        }
        const auto fields = split_csv(line);
        if (first_record) {
            first_record = false;
            if (!col_index) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == *column) col_index = i;
                }
                if (!col_index) throw CliError(kExitUsage, "column '" + *column + "' not found in header");
                continue;
            }
            if (*col_index < fields.size() && !to_double(fields[*col_index])) continue;  // header
        }
        if (*col_index >= fields.size()) {
            throw CliError(kExitUsage, "line " + std::to_string(line_no) + ": missing column");
        }
        const auto v = to_double(fields[*col_index]);
        if (!v || !std::isfinite(*v)) {
            throw CliError(kExitUsage, "line " + std::to_string(line_no) + ": not a finite number");
        }
        values.push_back(*v);
    }
    if (values.empty()) throw CliError(kExitUsage, "input contains no numbers");
    return values;
}

std::vector<double> read_numbers(const std::string& path, const std::optional<std::string>& column) {
    if (path == "-") return parse_numbers(std::cin, column);
    std::ifstream in(path);
    if (!in) throw CliError(kExitUsage, "cannot read input file '" + path + "'");
    return parse_numbers(in, column);
}

}  // namespace cgof::cli
