#pragma once

#include <cstdint>
#include <string_view>

namespace hcert {

/// Identifier of the edge-sampling generator. Bump when the mapping below changes.
inline constexpr std::string_view kRngId = "splitmix64-edge-v1";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform draw in [0,1) that is a pure function of (seed, key).
constexpr double keyed_uniform(std::uint64_t seed, std::uint64_t key) noexcept {
    const std::uint64_t bits = splitmix64(seed ^ splitmix64(key));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Child seed for trial `index` at size `n`: seed ^ hash(n, index).
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) noexcept {
    return seed ^ splitmix64(splitmix64(n) ^ (index * 0xd1b54a32d192ed03ULL));
}

}  // namespace hcert
