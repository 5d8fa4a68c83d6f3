#include "hrte/initial_data.hpp"

#include <cmath>
#include <stdexcept>

#include "hrte/fft.hpp"
#include "hrte/norms.hpp"
#include "hrte/rng.hpp"

namespace hrte {

DataKind data_kind_from_string(const std::string& name) {
    if (name == "gaussian") return DataKind::gaussian;
    if (name == "plane_wave") return DataKind::plane_wave;
    if (name == "rough_Hs") return DataKind::rough_Hs;
    throw std::invalid_argument("unknown initial data kind: " + name);
}

namespace {

constexpr double kRoughEps = 0.01; // keeps the H^s sum marginally convergent

ComplexField make_gaussian(const GridSpec& g, const InitialDataParams& p) {
    std::vector<double> x0 = p.center;
    if (x0.empty()) x0.assign(g.n, 0.5 * g.L);
    if (static_cast<int>(x0.size()) != g.n)
        throw std::invalid_argument("gaussian data: center size != dimension");
    std::vector<int> k = p.k;
    if (k.empty()) k.assign(g.n, 0);
    if (static_cast<int>(k.size()) != g.n)
        throw std::invalid_argument("gaussian data: boost mode size != dimension");
    if (!(p.sigma > 0))
        throw std::invalid_argument("gaussian data: sigma must be > 0");

    ComplexField f(g);
    const double inv2s2 = 1.0 / (2.0 * p.sigma * p.sigma);
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        double r2 = 0.0, phase = 0.0;
        for (int a = 0; a < g.n; ++a) {
            double d = g.x_of_index(idx[a]) - x0[a];
            d -= g.L * std::floor(d / g.L + 0.5); // minimum image
            r2 += d * d;
            phase += 2.0 * M_PI / g.L * k[a] * g.x_of_index(idx[a]);
        }
        f.values[flat] = p.amplitude * std::exp(-r2 * inv2s2) *
                         cplx(std::cos(phase), std::sin(phase));
    });
    return f;
}

ComplexField make_plane_wave(const GridSpec& g, const InitialDataParams& p) {
    std::vector<int> k = p.k;
    if (k.empty()) k.assign(g.n, 0);
    if (static_cast<int>(k.size()) != g.n)
        throw std::invalid_argument("plane_wave data: mode size != dimension");
    ComplexField f(g);
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        double phase = 0.0;
        for (int a = 0; a < g.n; ++a)
            phase += 2.0 * M_PI / g.L * k[a] * g.x_of_index(idx[a]);
        f.values[flat] = p.amplitude * cplx(std::cos(phase), std::sin(phase));
    });
    return f;
}

ComplexField make_rough(const GridSpec& g, const InitialDataParams& p,
                        std::uint64_t seed) {
    if (!(p.s > 0 && p.s < 1))
        throw std::invalid_argument("rough_Hs data: s must lie in (0,1)");
    if (!(p.target_norm > 0))
        throw std::invalid_argument("rough_Hs data: target norm must be > 0");

    const double decay = -(p.s + 0.5 * g.n + kRoughEps);
    SpectralCoeffs c(g);
    std::vector<int> kvec(g.n);
    for_each_mode(g, [&](std::size_t flat, const int* idx, double xi2) {
        for (int a = 0; a < g.n; ++a) kvec[a] = g.mode_of_index(idx[a]);
        const double sd = std::pow(1.0 + xi2, 0.5 * decay);
        cplx z = rng::mode_gaussian(seed, kvec.data(), g.n);
        if (p.band_limit > 0 && xi2 > p.band_limit * p.band_limit) z = 0.0;
        c.coeffs[flat] = sd * z;
    });
    ComplexField f = inverse_transform(c);
    const double norm = sobolev_norm(f, p.s, DerivKind::inhomogeneous);
    if (norm == 0.0)
        throw std::runtime_error("rough_Hs data: degenerate zero draw");
    const double scale = p.target_norm / norm;
    for (auto& z : f.values) z *= scale;
    return f;
}

} // namespace

ComplexField make_initial_data(const GridSpec& grid,
                               const InitialDataParams& params,
                               std::uint64_t seed) {
    switch (params.kind) {
        case DataKind::gaussian: return make_gaussian(grid, params);
        case DataKind::plane_wave: return make_plane_wave(grid, params);
        case DataKind::rough_Hs: return make_rough(grid, params, seed);
    }
    throw std::invalid_argument("unknown initial data kind");
}

} // namespace hrte
