#pragma once

#include <cstdint>
#include <string_view>

namespace eudata {

// All randomness in the toolkit flows from a single master seed through
// derive_seed(seed, label, index). The scheme is fixed 64-bit integer
// arithmetic, so every platform reproduces the same draws bit for bit.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                                 std::uint64_t index) {
    // FNV-1a over the label bytes, then the seed and index, then a final mix.
    std::uint64_t h = 14695981039346656037ull;
    auto absorb = [&h](std::uint64_t byte) {
        h ^= byte & 0xffu;
        h *= 1099511628211ull;
    };
    for (char c : label) absorb(static_cast<std::uint64_t>(c));
    for (int i = 0; i < 8; ++i) absorb(seed >> (8 * i));
    for (int i = 0; i < 8; ++i) absorb(index >> (8 * i));
    return splitmix64(h);
}

// Deterministic stream of 64-bit words from a derived seed.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw from [-bound, bound] \ {0}; bound >= 2 is enforced by
    // the callers that expose it. Modulo bias is irrelevant here, only
    // determinism and a wide spread matter.
    long long nonzero_in_bound(long long bound) {
        const std::uint64_t span = static_cast<std::uint64_t>(2 * bound);
        const long long r = static_cast<long long>(next() % span);
        return r < bound ? r - bound : r - bound + 1;
    }

private:
    std::uint64_t state_;
};

}  // namespace eudata
