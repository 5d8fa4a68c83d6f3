#include "hrte/multiplier.hpp"

#include <cmath>
#include <sstream>

namespace hrte {

void apply_radial_multiplier_inplace(SpectralCoeffs& c,
                                     const std::function<double(double)>& sigma) {
    for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
        const double m = sigma(std::sqrt(xi2));
        if (!std::isfinite(m)) {
            std::ostringstream os;
            os << "radial multiplier returned non-finite value at |xi| = "
               << std::sqrt(xi2);
            throw std::invalid_argument(os.str());
        }
        c.coeffs[flat] *= m;
    });
}

ComplexField apply_radial_multiplier(const ComplexField& f,
                                     const std::function<double(double)>& sigma) {
    SpectralCoeffs c = forward_transform(f);
    apply_radial_multiplier_inplace(c, sigma);
    return inverse_transform(c);
}

ComplexField frac_derivative(const ComplexField& f, double s, DerivKind kind) {
    if (kind == DerivKind::homogeneous) {
        return apply_radial_multiplier(f, [s](double r) {
            return r == 0.0 ? 0.0 : std::pow(r, s);
        });
    }
    return apply_radial_multiplier(
        f, [s](double r) { return std::pow(1.0 + r * r, 0.5 * s); });
}

ComplexField spectral_derivative(const ComplexField& f, int axis) {
    if (axis < 0 || axis >= f.grid.n)
        throw std::invalid_argument("spectral_derivative: axis out of range");
    SpectralCoeffs c = forward_transform(f);
    const GridSpec& g = c.grid;
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        const int i = idx[axis];
        if (i == g.M / 2) {
            c.coeffs[flat] = 0.0; // unpaired Nyquist row
        } else {
            c.coeffs[flat] *= cplx(0.0, g.xi_of_index(i));
        }
    });
    return inverse_transform(c);
}

namespace {

// exp(-1/x) for x > 0, 0 otherwise.
double mollifier(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// Smooth ramp from 0 at t<=0 to 1 at t>=1.
double smooth_ramp(double t) {
    const double a = mollifier(t);
    const double b = mollifier(1.0 - t);
    return a / (a + b);
}

} // namespace

double lp_cutoff_psi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    return 1.0 - smooth_ramp(r - 1.0);
}

double lp_bump_phi(double r) { return lp_cutoff_psi(r) - lp_cutoff_psi(2.0 * r); }

Flagged<ComplexField> lp_project(const ComplexField& f, int k) {
    const double scale = std::ldexp(1.0, k); // 2^k
    Flagged<ComplexField> out;
    out.warning = 2.0 * scale > f.grid.nyquist();
    out.value = apply_radial_multiplier(
        f, [scale](double r) { return lp_bump_phi(r / scale); });
    return out;
}

ComplexField lp_project_low(const ComplexField& f, int k) {
    const double scale = std::ldexp(1.0, k);
    return apply_radial_multiplier(
        f, [scale](double r) { return lp_cutoff_psi(r / scale); });
}

} // namespace hrte
