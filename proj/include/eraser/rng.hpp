#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace eraser {

// splitmix64 finalizer; fast, well-mixed 64-bit hash step.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a stage tag.
// Every randomized stage draws its seed through this so stages can be
// replayed in isolation from the single run seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(base ^ h);
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::string_view tag) {
    return std::mt19937_64(derive_seed(base, tag));
}

}  // namespace eraser
