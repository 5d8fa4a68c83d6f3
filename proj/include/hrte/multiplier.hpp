#pragma once

#include <functional>

#include "hrte/fft.hpp"

namespace hrte {

enum class DerivKind { homogeneous, inhomogeneous };

// Result wrapper for operations that can succeed with a caveat.
template <typename T>
struct Flagged {
    T value;
    bool warning = false;
};

// Apply a radial Fourier multiplier: out = F^{-1}[ sigma(|xi|) F f ].
// sigma must return finite values on the whole lattice, including |xi| = 0.
// Plane waves on the lattice are eigenfunctions with eigenvalue sigma(|xi0|).
ComplexField apply_radial_multiplier(const ComplexField& f,
                                     const std::function<double(double)>& sigma);

// Same, acting directly on coefficients (no transforms).
void apply_radial_multiplier_inplace(SpectralCoeffs& c,
                                     const std::function<double(double)>& sigma);

// Fractional derivative:
//   homogeneous    |xi|^s   (zero mode set to 0; mean-zero convention)
//   inhomogeneous  (1+|xi|^2)^{s/2}
ComplexField frac_derivative(const ComplexField& f, double s, DerivKind kind);

// d/dx_axis via the multiplier i*xi_axis. The Nyquist row of the axis is
// zeroed (the odd symbol has no partner mode there).
ComplexField spectral_derivative(const ComplexField& f, int axis);

// Smooth cutoff psi: 1 on [0,1], 0 on [2,inf), C-infinity in between
// (built from the exp(-1/x) mollifier), and the dyadic bump
// phi(r) = psi(r) - psi(2r) supported in [1/2, 2] with phi(1) = 1.
double lp_cutoff_psi(double r);
double lp_bump_phi(double r);

// Littlewood-Paley projection onto the annulus |xi| ~ 2^k: symbol
// phi(|xi|/2^k), spectrum supported in [2^{k-1}, 2^{k+1}]. The warning flag
// is set when 2^{k+1} exceeds the lattice Nyquist (the band is clipped).
Flagged<ComplexField> lp_project(const ComplexField& f, int k);

// Low block P_{<=k}: symbol psi(|xi|/2^k). Together with lp_project the
// family telescopes: P_{<=k0} + sum_{k>k0} P_k = identity on the lattice.
ComplexField lp_project_low(const ComplexField& f, int k);

} // namespace hrte
