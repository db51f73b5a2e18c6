#pragma once

#include <cstdint>
#include <random>

namespace qelm::rng {

/// SplitMix64 finalizer; stateless bijective mix of a 64-bit word.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stream purpose tags. Every independent stream family gets its own tag so
// that enlarging one sweep axis never shifts the seeds of another.
inline constexpr std::uint64_t kStreamTm = 0x544d5f5354524541ull;
inline constexpr std::uint64_t kStreamProbe = 0x50524f4245535452ull;
inline constexpr std::uint64_t kStreamShuffle = 0x53485546464c4531ull;
inline constexpr std::uint64_t kStreamNoise = 0x4e4f495345535452ull;
inline constexpr std::uint64_t kStreamSubset = 0x5355425345545352ull;
inline constexpr std::uint64_t kStreamBaseline = 0x424153454c494e45ull;

/// Counter-based stream splitting: seed = mix(mix(master ^ purpose) ^ index).
/// Deterministic, and independent streams for distinct (purpose, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose,
                                 std::uint64_t index) {
    return splitmix64(splitmix64(master ^ purpose) ^ index);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace qelm::rng
