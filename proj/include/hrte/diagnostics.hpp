#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrte/imethod.hpp"
#include "hrte/morawetz.hpp"

namespace hrte {

// Which field a space-time accumulator tracks.
enum class StTarget { phi, iphi, bessel_iphi };

struct StPair {
    StTarget target = StTarget::phi;
    double q = 2;
    double r = 2;

    std::string column_name() const;
};

// One per-sample diagnostics tuple. The named norms beyond the CSV columns
// (hhalf_*, l2_iphi) feed the inequality fits.
struct DiagnosticsRecord {
    long step = 0;
    double t = 0;
    double mass = 0;
    double energy = 0;          // E[phi]
    double modified_energy = 0; // E(I_N phi)
    double h_s_norm = 0;        // ||phi||_{H^s}
    double h1_of_I = 0;         // ||I_N phi||_{H^1}
    std::optional<double> morawetz;
    std::optional<double> morawetz_stderr;

    double hhalf_phi = 0;  // ||phi||_{Hdot^{1/2}}
    double l2_iphi = 0;    // ||I phi||_{L^2}
    double hhalf_iphi = 0; // ||I phi||_{Hdot^{1/2}}

    std::vector<double> st_inst;  // instantaneous ||.||_{L^r} per pair
    std::vector<double> st_accum; // running sum_t ||.||^q dt per pair
};

// Computes a DiagnosticsRecord from a state snapshot, reusing one spectrum
// of phi for all the spectral norms. Owns the running space-time sums, so
// one engine serves exactly one run.
class DiagnosticsEngine {
public:
    struct Options {
        double mu = 1.0;
        double s = 0.5;
        MultiplierSpec ispec{1.0, 0.5};
        std::vector<StPair> pairs;
        std::optional<PairSampler> morawetz_sampler;
        bool morawetz_exact = false; // force the O(M^{2n}) sum (small grids)
    };

    explicit DiagnosticsEngine(Options opt) : opt_(std::move(opt)) {
        accums_.reserve(opt_.pairs.size());
        for (const auto& p : opt_.pairs)
            accums_.push_back(SpacetimeAccumulator{p.q, p.r});
    }

    const Options& options() const { return opt_; }

    DiagnosticsRecord sample(long step, double t, const ComplexField& phi);

private:
    Options opt_;
    std::vector<SpacetimeAccumulator> accums_;
};

} // namespace hrte
