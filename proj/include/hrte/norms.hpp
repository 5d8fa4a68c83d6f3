#pragma once

#include "hrte/field.hpp"
#include "hrte/multiplier.hpp"

namespace hrte {

// ||f||_{L^p} by box quadrature, (sum |f|^p h^n)^{1/p}; p = inf gives the
// max modulus. p < 1 is rejected.
double lebesgue_norm(const ComplexField& f, double p);

// Sobolev norm of order s:
//   homogeneous    sqrt( L^n sum_{xi != 0} |xi|^{2s} |f^(xi)|^2 )
//   inhomogeneous  sqrt( L^n sum (1+|xi|^2)^s |f^(xi)|^2 )
// Equals the L^2 norm of frac_derivative(f, s, kind).
double sobolev_norm(const ComplexField& f, double s, DerivKind kind);
double sobolev_norm(const SpectralCoeffs& c, double s, DerivKind kind);

// Plain L^2 norm (physical-side quadrature).
double l2_norm(const ComplexField& f);

// ||a - b||_{L^2}, fields on the same grid.
double l2_distance(const ComplexField& a, const ComplexField& b);

} // namespace hrte
