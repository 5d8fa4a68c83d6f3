#pragma once

#include <cstdint>
#include <vector>

#include "hrte/initial_data.hpp"
#include "hrte/integrator.hpp"

namespace hrte {

// Ordinary least squares y = a + b x with R^2.
struct LineFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct DriftRow {
    double N = 0;
    double sup_drift = 0;       // sup_t |E(I_N phi)(t) - E(I_N phi_0)|
    double sup_energy_drift = 0; // sup_t |E(phi)(t) - E(phi_0)| (noise floor)
};

struct AlmostConservationResult {
    std::vector<DriftRow> rows;
    LineFit fit; // log(sup_drift) vs log(N)
};

// One defocusing evolution per cutoff N, same rough H^s data throughout,
// modified-energy drift recorded at every sample. Fits the log-log slope of
// sup-drift versus N. Throws if any run aborts (the table would be invalid).
AlmostConservationResult almost_conservation_experiment(
    double s, const std::vector<double>& N_list, const SimConfig& cfg_template,
    const InitialDataParams& data_params, std::uint64_t seed);

} // namespace hrte
