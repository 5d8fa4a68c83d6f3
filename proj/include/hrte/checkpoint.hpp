#pragma once

#include <string>

#include "hrte/field.hpp"

namespace hrte {

// Binary state snapshot. Layout (little-endian):
//   "HRTE" (4 bytes) | version u32 | n u32 | M u32 |
//   L, t, dt, s, N, mu (f64 each, mu = +-1.0 or 0.0) |
//   M^n complex samples, interleaved (re, im) f64, row-major.
// save -> load round-trips bitwise.
struct CheckpointData {
    std::uint32_t version = 1;
    int n = 3;
    int M = 0;
    double L = 0;
    double t = 0;
    double dt = 0;
    double s = 0;
    double N = 0;
    double mu = 0;
    std::vector<cplx> values;

    GridSpec grid() const { return GridSpec(n, M, L); }
};

constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const std::string& path, const CheckpointData& data);

// Throws ConfigError on bad magic, version mismatch (naming both versions)
// or truncation (reporting the byte offset where the file ended).
CheckpointData load_checkpoint(const std::string& path);

} // namespace hrte
