#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cgof/error.hpp"

namespace cgof {

/// A non-empty list of finite observations.
class Sample {
public:
    explicit Sample(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw DomainError("Sample: at least one observation is required");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw DomainError("Sample: observations must be finite");
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    /// Returns c*x + d for every observation.
    [[nodiscard]] Sample affine(double c, double d) const {
        std::vector<double> out(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out[i] = c * values_[i] + d;
        return Sample(std::move(out));
    }

    friend bool operator==(const Sample&, const Sample&) = default;

private:
    std::vector<double> values_;
};

}  // namespace cgof
