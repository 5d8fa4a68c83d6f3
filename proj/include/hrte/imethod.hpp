#pragma once

#include "hrte/field.hpp"

namespace hrte {

// Smoothing multiplier m(xi): radially symmetric, nonincreasing, C^1,
//   m = 1                 for |xi| <= N,
//   m = (N/|xi|)^{1-s}    for |xi| >= 2N,
// blended in between as (N/r)^{(1-s) theta(u)} with u = log2(r/N) and
// theta the cubic smoothstep 3u^2 - 2u^3.
struct MultiplierSpec {
    double N = 1.0; // cutoff frequency, > 0
    double s = 0.5; // target regularity, in (0,1)

    MultiplierSpec() = default;
    MultiplierSpec(double N_, double s_);
};

double multiplier_m(double r, const MultiplierSpec& spec);

// I_N phi: radial multiplier application with symbol m. Identity on fields
// band-limited below N.
ComplexField apply_I(const ComplexField& phi, const MultiplierSpec& spec);

// ||phi||_{L^2}^2 by box quadrature.
double mass(const ComplexField& phi);

struct EnergyBreakdown {
    double kinetic = 0;   // integral |grad phi|^2 (spectral sum)
    double potential = 0; // integral (|x|^{-2} * |phi|^2) |phi|^2 (quadrature)
    double total = 0;     // kinetic + mu * potential
};

// E[phi] = integral |grad phi|^2 + mu (|x|^{-2} * |phi|^2)|phi|^2 dx.
// Conserved by the flow for either sign (it is twice the Hamiltonian of
// i dphi/dt + (1/2) Lap phi = mu (|x|^{-2} * |phi|^2) phi).
EnergyBreakdown energy(const ComplexField& phi, double mu);

// Same, reusing an already computed spectrum of phi.
EnergyBreakdown energy(const ComplexField& phi, const SpectralCoeffs& coeffs,
                       double mu);

// E(I_N phi).
EnergyBreakdown modified_energy(const ComplexField& phi,
                                const MultiplierSpec& spec, double mu);

// ||I_N phi||_{H^1} together with the two sandwich ratios
//   upper = ||I phi||_{H^1} / (N^{1-s} ||phi||_{H^s})
//   lower = ||phi||_{H^s} / ||I phi||_{H^1}.
// valid = false on the zero field (ratios undefined).
struct SandwichReport {
    double h1_of_I = 0;
    double hs = 0;
    double upper_ratio = 0;
    double lower_ratio = 0;
    bool valid = false;
};

SandwichReport h1_of_I(const ComplexField& phi, const MultiplierSpec& spec);

// Growth exponent alpha(s,n) = (n-2) s (1-s) / (s(3n-4) - 2(n-2)), defined
// for s in the open interval (2(n-2)/(3n-4), 1). Outside it, throws naming
// both endpoints.
double growth_exponent_alpha(double s, int n);

// Companion scaling numbers: lambda(N) = N^{(1-s)/s} and the exponent of the
// cutoff selection rule N^{1 - 2(n-2)(1-s)/(n s)}.
double scaling_lambda(double s, double N);
double cutoff_selection_exponent(double s, int n);

// Admissibility interval endpoints for dimension n.
double admissible_s_lower(int n);

} // namespace hrte
