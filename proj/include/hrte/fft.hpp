#pragma once

#include "hrte/field.hpp"

namespace hrte {

// Forward transform, coeffs = DFT(values) / M^n (see SpectralCoeffs for the
// convention). Rejects non-finite input, naming the first bad flat index.
SpectralCoeffs forward_transform(const ComplexField& f);

// Inverse transform, values(x) = sum_xi coeffs(xi) e^{i xi . x}.
// inverse_transform(forward_transform(f)) == f up to round-off.
ComplexField inverse_transform(const SpectralCoeffs& c);

} // namespace hrte
