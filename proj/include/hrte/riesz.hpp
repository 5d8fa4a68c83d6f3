#pragma once

#include "hrte/field.hpp"

namespace hrte {

// Fourier constant of the |x|^{-2} kernel in R^n under the convention
// F[f](xi) = integral f(x) e^{-i x.xi} dx:
//   F[|x|^{-2}] = c_n |xi|^{-(n-2)},  c_n = 2^{n-2} pi^{n/2} Gamma((n-2)/2).
// For n = 3 this is 2*pi^2.
double riesz_constant(int n);

// In-place multiplication by c_n |xi|^{-(n-2)} with the zero mode dropped.
void apply_riesz_multiplier(SpectralCoeffs& c);

// V = |x|^{-2} * rho on the periodic box, realized spectrally:
//   V^(xi) = c_n |xi|^{-(n-2)} rho^(xi),  V^(0) = 0.
// rho must be (numerically) real: max |Im rho| <= 1e-10 * max(1, max |Re rho|).
// The result is exactly real (imaginary residue checked, then dropped).
// Rejects n < 3, where the kernel is not locally integrable.
ComplexField riesz_potential(const ComplexField& rho);

// mu * (|x|^{-2} * |phi|^2) phi, pointwise.
ComplexField hartree_nonlinearity(const ComplexField& phi, double mu);

} // namespace hrte
