#pragma once

#include <complex>
#include <vector>

#include "hrte/grid.hpp"

namespace hrte {

using cplx = std::complex<double>;

// Physical-space complex amplitudes, row-major over the grid axes.
struct ComplexField {
    GridSpec grid;
    std::vector<cplx> values;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g) : grid(g), values(g.size()) {}
    ComplexField(const GridSpec& g, std::vector<cplx> v)
        : grid(g), values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    cplx& operator[](std::size_t i) { return values[i]; }
    const cplx& operator[](std::size_t i) const { return values[i]; }
};

// Fourier coefficients on the same lattice, stored in FFT index order.
// Normalization: coeffs = DFT(values) / M^n, so that
//   values(x) = sum_xi coeffs(xi) e^{i xi . x}
// (a constant field c has DC coefficient c) and Parseval reads
//   ||f||_{L^2}^2 = h^n sum_x |f|^2 = L^n sum_xi |coeffs|^2.
struct SpectralCoeffs {
    GridSpec grid;
    std::vector<cplx> coeffs;

    SpectralCoeffs() = default;
    explicit SpectralCoeffs(const GridSpec& g) : grid(g), coeffs(g.size()) {}
    SpectralCoeffs(const GridSpec& g, std::vector<cplx> c)
        : grid(g), coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    cplx& operator[](std::size_t i) { return coeffs[i]; }
    const cplx& operator[](std::size_t i) const { return coeffs[i]; }
};

// Real n-vector field (e.g. the momentum density Im(conj(phi) grad phi)).
struct RealVectorField {
    GridSpec grid;
    std::vector<std::vector<double>> comps; // comps[axis][flat]

    RealVectorField() = default;
    explicit RealVectorField(const GridSpec& g)
        : grid(g), comps(g.n, std::vector<double>(g.size(), 0.0)) {}
};

} // namespace hrte
