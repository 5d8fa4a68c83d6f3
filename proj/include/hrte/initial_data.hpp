#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hrte/field.hpp"

namespace hrte {

enum class DataKind { gaussian, plane_wave, rough_Hs };

DataKind data_kind_from_string(const std::string& name);

struct InitialDataParams {
    DataKind kind = DataKind::gaussian;
    double amplitude = 1.0;           // gaussian / plane_wave prefactor
    double sigma = 1.0;               // gaussian width
    std::vector<double> center;       // gaussian center (defaults to box middle)
    std::vector<int> k;               // lattice mode: plane-wave xi0, gaussian boost
    double s = 0.5;                   // rough_Hs regularity
    double target_norm = 1.0;         // rough_Hs: requested ||.||_{H^s}
    double band_limit = 0.0;          // rough_Hs: if > 0, zero modes |xi| > band_limit
};

// Deterministic in (params, seed):
//   gaussian    A exp(-|x - x0|^2 / 2 sigma^2) e^{i k.x}   (minimum-image |x-x0|)
//   plane_wave  A e^{i xi0 . x}, xi0 = (2 pi / L) k on the lattice
//   rough_Hs    independent complex Gaussian coefficients with standard
//               deviation ~ <xi>^{-s - n/2 - 0.01}, then rescaled to the
//               requested H^s norm. Coefficients are keyed by the integer
//               mode vector, so refining M extends the same realization.
ComplexField make_initial_data(const GridSpec& grid,
                               const InitialDataParams& params,
                               std::uint64_t seed);

} // namespace hrte
