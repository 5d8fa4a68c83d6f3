#pragma once

#include <cmath>
#include <vector>

#include "hrte/fft.hpp"
#include "hrte/norms.hpp"
#include "hrte/rng.hpp"

namespace hrte::test {

// Seeded random field with spectral coefficients decaying like <xi>^{-decay}
// (decay = 0 gives white noise).
inline ComplexField random_field(const GridSpec& g, std::uint64_t seed,
                                 double decay = 0.0) {
    SpectralCoeffs c(g);
    std::vector<int> kvec(g.n);
    for_each_mode(g, [&](std::size_t flat, const int* idx, double xi2) {
        for (int a = 0; a < g.n; ++a) kvec[a] = g.mode_of_index(idx[a]);
        c.coeffs[flat] = rng::mode_gaussian(seed, kvec.data(), g.n) *
                         std::pow(1.0 + xi2, -0.5 * decay);
    });
    return inverse_transform(c);
}

// Random field with spectrum truncated to |xi| <= cutoff.
inline ComplexField band_limited_field(const GridSpec& g, std::uint64_t seed,
                                       double cutoff) {
    SpectralCoeffs c(g);
    std::vector<int> kvec(g.n);
    for_each_mode(g, [&](std::size_t flat, const int* idx, double xi2) {
        if (xi2 > cutoff * cutoff) return;
        for (int a = 0; a < g.n; ++a) kvec[a] = g.mode_of_index(idx[a]);
        c.coeffs[flat] = rng::mode_gaussian(seed, kvec.data(), g.n);
    });
    return inverse_transform(c);
}

inline double rel_l2_error(const ComplexField& got, const ComplexField& want) {
    const double ref = l2_norm(want);
    return ref > 0 ? l2_distance(got, want) / ref : l2_norm(got);
}

// Brute-force DFT, the oracle for the FFT path: O(M^{2n}).
inline SpectralCoeffs direct_dft(const ComplexField& f) {
    const GridSpec& g = f.grid;
    SpectralCoeffs out(g);
    std::vector<int> kidx(g.n), xidx(g.n);
    for_each_index(g, [&](std::size_t kf, const int* ki) {
        for (int a = 0; a < g.n; ++a) kidx[a] = ki[a];
        cplx sum = 0.0;
        for_each_index(g, [&](std::size_t xf, const int* xi) {
            double phase = 0.0;
            for (int a = 0; a < g.n; ++a)
                phase += 2.0 * M_PI * g.mode_of_index(kidx[a]) * xi[a] / g.M;
            sum += f.values[xf] * cplx(std::cos(phase), -std::sin(phase));
        });
        out.coeffs[kf] = sum / static_cast<double>(g.size());
    });
    return out;
}

} // namespace hrte::test
