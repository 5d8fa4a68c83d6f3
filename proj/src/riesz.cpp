#include "hrte/riesz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hrte/fft.hpp"

namespace hrte {

double riesz_constant(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "riesz_constant: |x|^{-2} requires dimension n >= 3");
    return std::pow(2.0, n - 2) * std::pow(M_PI, 0.5 * n) *
           std::tgamma(0.5 * (n - 2));
}

void apply_riesz_multiplier(SpectralCoeffs& c) {
    const int n = c.grid.n;
    const double cn = riesz_constant(n);
    if (n == 3) {
        for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
            c.coeffs[flat] *= xi2 == 0.0 ? 0.0 : cn / std::sqrt(xi2);
        });
    } else if (n == 4) {
        for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
            c.coeffs[flat] *= xi2 == 0.0 ? 0.0 : cn / xi2;
        });
    } else {
        const double expo = -0.5 * (n - 2);
        for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
            c.coeffs[flat] *= xi2 == 0.0 ? 0.0 : cn * std::pow(xi2, expo);
        });
    }
}

ComplexField riesz_potential(const ComplexField& rho) {
    const GridSpec& g = rho.grid;
    if (g.n < 3)
        throw std::invalid_argument(
            "riesz_potential: kernel not locally integrable for n < 3");

    double max_re = 0.0, max_im = 0.0;
    for (const auto& z : rho.values) {
        max_re = std::max(max_re, std::abs(z.real()));
        max_im = std::max(max_im, std::abs(z.imag()));
    }
    if (max_im > 1e-10 * std::max(1.0, max_re)) {
        std::ostringstream os;
        os << "riesz_potential: density has imaginary residue " << max_im
           << " exceeding 1e-10 * max(1, " << max_re << ")";
        throw std::invalid_argument(os.str());
    }

    SpectralCoeffs c = forward_transform(rho);
    apply_riesz_multiplier(c);
    ComplexField v = inverse_transform(c);

    // The multiplier is real and radial, so v is real up to round-off; keep
    // it exactly real for the phase-rotation substep.
    double vmax = 0.0, imax = 0.0;
    for (const auto& z : v.values) {
        vmax = std::max(vmax, std::abs(z.real()));
        imax = std::max(imax, std::abs(z.imag()));
    }
    if (imax > 1e-10 * std::max(1.0, vmax))
        throw std::runtime_error("riesz_potential: output imaginary residue too large");
    for (auto& z : v.values) z = cplx(z.real(), 0.0);
    return v;
}

ComplexField hartree_nonlinearity(const ComplexField& phi, double mu) {
    ComplexField rho(phi.grid);
    for (std::size_t i = 0; i < phi.size(); ++i)
        rho.values[i] = cplx(std::norm(phi.values[i]), 0.0);
    ComplexField v = riesz_potential(rho);
    ComplexField out(phi.grid);
    for (std::size_t i = 0; i < phi.size(); ++i)
        out.values[i] = mu * v.values[i].real() * phi.values[i];
    return out;
}

} // namespace hrte
