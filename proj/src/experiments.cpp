#include "hrte/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace hrte {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit f;
    const double denom = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double fit = f.intercept + f.slope * x[i];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    f.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

AlmostConservationResult almost_conservation_experiment(
    double s, const std::vector<double>& N_list, const SimConfig& cfg_template,
    const InitialDataParams& data_params, std::uint64_t seed) {
    if (N_list.size() < 2)
        throw std::invalid_argument(
            "almost_conservation_experiment: need >= 2 cutoffs");
    if (cfg_template.mu != 1.0)
        throw std::invalid_argument(
            "almost_conservation_experiment: defocusing runs only (mu = +1)");

    InitialDataParams dp = data_params;
    dp.s = s;
    const ComplexField phi0 = make_initial_data(cfg_template.grid, dp, seed);

    AlmostConservationResult result;
    for (double N : N_list) {
        SimConfig cfg = cfg_template;
        cfg.s = s;
        cfg.N = N;
        DiagnosticsEngine engine({cfg.mu, cfg.s, MultiplierSpec(N, s), {}, {}, false});
        const Trajectory traj = evolve(cfg, phi0, engine);

        DriftRow row;
        row.N = N;
        const double e0 = traj.records.front().modified_energy;
        const double raw0 = traj.records.front().energy;
        for (const auto& rec : traj.records) {
            row.sup_drift = std::max(row.sup_drift,
                                     std::abs(rec.modified_energy - e0));
            row.sup_energy_drift =
                std::max(row.sup_energy_drift, std::abs(rec.energy - raw0));
        }
        result.rows.push_back(row);
    }

    std::vector<double> logN, logD;
    for (const auto& row : result.rows) {
        logN.push_back(std::log(row.N));
        logD.push_back(std::log(std::max(row.sup_drift, 1e-300)));
    }
    result.fit = fit_line(logN, logD);
    return result;
}

} // namespace hrte
