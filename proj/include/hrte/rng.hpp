#pragma once

#include <cstdint>

#include "hrte/field.hpp"

namespace hrte {

// Counter-based random stream: every draw is a pure function of (seed, keys),
// so shards of a sampling plan reproduce the serial stream exactly and a
// spectral field generated mode-by-mode is independent of the grid size.
// Mixing is the SplitMix64 finalizer.
namespace rng {

inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
    return mix(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Uniform in (0, 1]: never returns 0 so it is safe under log().
inline double uniform(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

// Standard complex Gaussian (unit variance per real component) keyed by an
// integer mode vector; Box-Muller on two hashed uniforms.
cplx mode_gaussian(std::uint64_t seed, const int* kvec, int n);

// Uniform index in [0, size), size a power of two.
inline std::size_t uniform_index(std::uint64_t seed, std::uint64_t counter,
                                 std::uint64_t tag, std::size_t size) {
    std::uint64_t h = combine(combine(mix(seed), counter), tag);
    return static_cast<std::size_t>(h & (size - 1));
}

} // namespace rng
} // namespace hrte
