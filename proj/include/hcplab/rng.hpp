#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hcplab {

/// Engine used for every random draw. mt19937_64 output is fixed by the standard,
/// unlike the std:: distributions, so the helpers below do their own mapping.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a over the stream name; stable across platforms (std::hash is not).
constexpr std::uint64_t tag_hash(std::string_view tag) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed for sub-stream `index` of the named stream `tag` under the global `seed`.
/// Streams depend only on (seed, tag, index), never on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                    std::uint64_t index = 0) noexcept {
    return mix64(mix64(seed ^ tag_hash(tag)) + mix64(index + 0x632be59bd9b4e019ULL));
}

inline Engine make_engine(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
    return Engine(derive_seed(seed, tag, index));
}

/// Uniform integer in [0, bound), bound >= 1. Rejection keeps it unbiased.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    const std::uint64_t limit = Engine::max() - (Engine::max() % bound + 1) % bound;
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Engine& rng, double p) { return uniform01(rng) < p; }

}  // namespace hcplab
