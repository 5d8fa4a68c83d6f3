#pragma once

#include <cstdint>

#include "hrte/field.hpp"

namespace hrte {

// Deterministic pair/triple sampler for the Monte-Carlo quadratures below.
// The stream is counter-based (pure function of seed and draw index), so
// concurrent shards of a fixed plan reproduce the serial result exactly.
struct PairSampler {
    std::uint64_t seed = 0;
    std::size_t budget = 10000; // >= 1e4 for acceptance runs

    PairSampler() = default;
    PairSampler(std::uint64_t seed_, std::size_t budget_)
        : seed(seed_), budget(budget_) {}
};

struct McEstimate {
    double value = 0;
    double stderr_ = 0;
    std::size_t degenerate = 0; // coincident-point draws, contribute 0
};

// Momentum density Im(conj(phi) grad phi), spectral gradient.
RealVectorField momentum_density(const ComplexField& phi);

// Interaction functional
//   M[phi] = int |phi(x)|^2 ( int Im[conj(phi) grad phi](y) . (y-x)/|y-x| dy ) dx
// with minimum-image displacements (exact half-box offsets take the positive
// image) and the x = y diagonal contributing 0. Monte-Carlo over grid pairs,
// weight h^{2n} M^{2n} / budget.
McEstimate interaction_potential(const ComplexField& phi,
                                 const PairSampler& sampler);

// Exhaustive O(M^{2n}) double sum; allowed on grids with M^n <= 4096.
double interaction_potential_exact(const ComplexField& phi);

// Defocusing positivity term (n = 3):
//   2 int |phi(x)|^2 |phi(y)|^2 |phi(z)|^2
//       ( (y-x)/|y-x| - (z-x)/|z-x| ) . (y-z)/|y-z|^3  dx dy dz
// estimated over sampled triples; degenerate triples are skipped and counted.
McEstimate defocusing_term_estimate(const ComplexField& phi,
                                    const PairSampler& sampler);

// Running space-time norm accumulator for one (q, r) pair:
//   sum_t ||phi(t)||_{L^r}^q * dt   (right-rectangle rule over samples),
// finalize() = sum^{1/q}. q = inf tracks the running max instead.
struct SpacetimeAccumulator {
    double q = 2;
    double r = 2;
    double sum = 0;
    double t_now = 0;
    bool started = false;

    void add(double norm_r, double t);
    double finalize() const;
};

// Gagliardo-Nirenberg ratio
//   J(u) = int (|x|^{-2} * |u|^2) |u|^2 dx / ( ||u||_{L^2}^2 ||grad u||_{L^2}^2 ),
// invariant under u -> c u and under the critical rescaling. Rejects the
// zero field.
double gn_ratio(const ComplexField& u);

} // namespace hrte
