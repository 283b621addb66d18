#pragma once

#include <cstdint>
#include <random>

namespace cgof {

/// Base generator for every sampler. Recorded in output metadata.
using Engine = std::mt19937_64;

inline constexpr const char* kGeneratorName =
    "mt19937_64; stream seed = splitmix64(splitmix64(splitmix64(master) ^ domain) ^ index)";

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of sub-stream `index` inside `domain` of a master seed. Streams with
/// different (domain, index) pairs are treated as independent.
[[nodiscard]] constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t domain,
                                                  std::uint64_t index) noexcept {
    return splitmix64(splitmix64(splitmix64(master) ^ domain) ^ index);
}

/// Stream domains used by the Monte Carlo engine. Calibration draws never share
/// a domain with power-study draws.
namespace stream_domain {
inline constexpr std::uint64_t kDirect = 0;
inline constexpr std::uint64_t kCalibration = 1;
inline constexpr std::uint64_t kPValue = 2;
inline constexpr std::uint64_t kAlternativeBase = 1000;
}  // namespace stream_domain

[[nodiscard]] inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

/// Uniform on the open interval (0,1) from the top 53 bits.
[[nodiscard]] inline double uniform_open(Engine& eng) {
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace cgof
