#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hrte/errors.hpp"

namespace hrte {

// Uniform periodic grid on [0,L)^n with M points per axis, M a power of two.
// Frequency lattice: xi_j = (2*pi/L) * k_j with integer k_j in [-M/2, M/2),
// stored in standard FFT order (k = i for i < M/2, k = i - M otherwise).
struct GridSpec {
    int n = 3;      // spatial dimension
    int M = 64;     // points per axis, power of two, >= 4
    double L = 16;  // box edge length

    GridSpec() = default;
    GridSpec(int n_, int M_, double L_) : n(n_), M(M_), L(L_) { validate(); }

    void validate() const {
        if (n < 1) throw ConfigError("GridSpec: dimension must be >= 1");
        if (M < 4 || (M & (M - 1)) != 0)
            throw ConfigError("GridSpec: M must be a power of two and >= 4");
        if (!(L > 0)) throw ConfigError("GridSpec: box length must be positive");
    }

    double h() const { return L / M; }
    double cell_volume() const { return std::pow(h(), n); }
    double box_volume() const { return std::pow(L, n); }

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < n; ++a) s *= static_cast<std::size_t>(M);
        return s;
    }

    // Integer wavenumber for axis index i in [0, M).
    int mode_of_index(int i) const { return i < M / 2 ? i : i - M; }

    double xi_of_index(int i) const {
        return 2.0 * M_PI / L * mode_of_index(i);
    }

    // Largest |xi| representable along one axis (the Nyquist row).
    double nyquist() const { return 2.0 * M_PI / L * (M / 2); }

    // Physical coordinate of axis index i.
    double x_of_index(int i) const { return h() * i; }

    bool operator==(const GridSpec& o) const {
        return n == o.n && M == o.M && L == o.L;
    }
};

// Decompose a row-major flat index into per-axis indices (size n).
inline void unflatten(const GridSpec& g, std::size_t flat, int* idx) {
    for (int a = g.n - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % g.M);
        flat /= g.M;
    }
}

inline std::size_t flatten(const GridSpec& g, const int* idx) {
    std::size_t flat = 0;
    for (int a = 0; a < g.n; ++a)
        flat = flat * g.M + static_cast<std::size_t>(idx[a]);
    return flat;
}

// Visit every lattice point in row-major order. fn(flat, idx) receives the
// flat index and the per-axis index vector (valid during the call only).
template <typename Fn>
void for_each_index(const GridSpec& g, Fn&& fn) {
    std::vector<int> idx(g.n, 0);
    const std::size_t total = g.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        fn(flat, idx.data());
        for (int a = g.n - 1; a >= 0; --a) {
            if (++idx[a] < g.M) break;
            idx[a] = 0;
        }
    }
}

// Visit every lattice point with |xi|^2 precomputed per axis (odometer walk,
// no divisions in the hot loop).
template <typename Fn>
void for_each_mode(const GridSpec& g, Fn&& fn) {
    std::vector<double> xi2_axis(g.M);
    for (int i = 0; i < g.M; ++i) {
        const double xi = g.xi_of_index(i);
        xi2_axis[i] = xi * xi;
    }
    std::vector<int> idx(g.n, 0);
    std::vector<double> partial(g.n + 1, 0.0); // prefix sums of xi^2
    const std::size_t total = g.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (int a = 0; a < g.n; ++a)
            partial[a + 1] = partial[a] + xi2_axis[idx[a]];
        fn(flat, idx.data(), partial[g.n]);
        for (int a = g.n - 1; a >= 0; --a) {
            if (++idx[a] < g.M) break;
            idx[a] = 0;
        }
    }
}

} // namespace hrte
