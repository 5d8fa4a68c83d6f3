#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hrte/diagnostics.hpp"

namespace hrte {

struct SimConfig {
    double mu = 1.0; // +1 defocusing, -1 focusing, 0 free (test scaffolding)
    GridSpec grid;
    double dt = 5e-4;
    double T = 1.0;
    double s = 0.5;          // target regularity, in (0,1)
    double N = 1.0;          // I-method cutoff, >= 1
    std::uint64_t seed = 0;
    long sample_every = 1;   // steps between diagnostic samples
    long keep_state_every = 0; // samples between stored states (0: endpoints only)

    void validate() const;
    long total_steps() const;
};

struct Trajectory {
    std::vector<std::pair<double, ComplexField>> checkpoints; // (t, state)
    std::vector<DiagnosticsRecord> records;
    std::vector<StPair> pairs; // layout of the records' st_* vectors
    ComplexField final_state;
    double final_time = 0;
};

// One Strang step with exact substeps:
//   half linear kick  phi^ *= exp(-i |xi|^2 dt / 4),
//   full nonlinear    phi  *= exp(-i mu V dt),  V = |x|^{-2} * |phi|^2
//                     (exact: V only sees |phi|^2, which the phase rotation
//                      preserves),
//   half linear kick.
// Both substeps are isometries, so mass is conserved to round-off.
ComplexField step_strang(const ComplexField& phi, double dt, double mu);

// Extra per-sample callback (CSV writer, checkpoint writer, ...).
using SampleObserver =
    std::function<void(const DiagnosticsRecord&, const ComplexField&)>;

// Advance cfg.total_steps() Strang steps, sampling diagnostics every
// cfg.sample_every steps (and always at step 0 and the final step). Aborts
// with IntegratorBreakdown if the state goes non-finite or the relative mass
// drift exceeds 1e-6.
Trajectory evolve(const SimConfig& cfg, const ComplexField& phi0,
                  DiagnosticsEngine& engine,
                  const std::vector<SampleObserver>& observers = {});

// Rescale phi^lambda(x) = lambda^{-n/2} phi(x/lambda).
//   dyadic lambda = 2^j: spectral resampling onto the matched-spacing grid
//     (2^j M, 2^j L); for j < 0 the source must be band-limited to the
//     target lattice (rejected otherwise).
//   other lambda > 0: the box is relabeled (M stays, L -> lambda L); the
//     samples coincide with band-limited interpolation at the target points.
// The L^2 norm is preserved exactly; Hdot^s norms scale by lambda^{-s}.
ComplexField scale_field(const ComplexField& phi, double lambda);

} // namespace hrte
