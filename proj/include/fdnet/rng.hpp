#pragma once

#include <cstdint>
#include <random>

namespace fdnet {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed from (root, tag); stable across runs and platforms.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag) {
    return splitmix64(splitmix64(root) ^ splitmix64(tag + 0x632be59bd9b4e019ULL));
}

/// One independent generator per (root seed, stream index). Realizations
/// use index as the stream id, making results order- and worker-invariant.
inline std::mt19937_64 make_stream(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = derive_seed(root, index);
    std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace fdnet
