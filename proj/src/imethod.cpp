#include "hrte/imethod.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hrte/fft.hpp"
#include "hrte/norms.hpp"
#include "hrte/riesz.hpp"

namespace hrte {

MultiplierSpec::MultiplierSpec(double N_, double s_) : N(N_), s(s_) {
    if (!(N > 0)) throw std::invalid_argument("MultiplierSpec: N must be > 0");
    if (!(s > 0 && s < 1))
        throw std::invalid_argument("MultiplierSpec: s must lie in (0,1)");
}

double multiplier_m(double r, const MultiplierSpec& spec) {
    if (r < 0) throw std::invalid_argument("multiplier_m: r must be >= 0");
    if (r <= spec.N) return 1.0;
    const double ratio = spec.N / r;
    if (r >= 2.0 * spec.N) return std::pow(ratio, 1.0 - spec.s);
    const double u = std::log2(r / spec.N); // in (0,1)
    const double theta = u * u * (3.0 - 2.0 * u);
    return std::pow(ratio, (1.0 - spec.s) * theta);
}

ComplexField apply_I(const ComplexField& phi, const MultiplierSpec& spec) {
    SpectralCoeffs c = forward_transform(phi);
    for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
        c.coeffs[flat] *= multiplier_m(std::sqrt(xi2), spec);
    });
    return inverse_transform(c);
}

double mass(const ComplexField& phi) {
    double sum = 0.0;
    for (const auto& z : phi.values) sum += std::norm(z);
    return sum * phi.grid.cell_volume();
}

EnergyBreakdown energy(const ComplexField& phi, double mu) {
    return energy(phi, forward_transform(phi), mu);
}

EnergyBreakdown energy(const ComplexField& phi, const SpectralCoeffs& c,
                       double mu) {
    EnergyBreakdown e;
    double kin = 0.0;
    for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
        kin += xi2 * std::norm(c.coeffs[flat]);
    });
    e.kinetic = kin * phi.grid.box_volume();

    ComplexField rho(phi.grid);
    for (std::size_t i = 0; i < phi.size(); ++i)
        rho.values[i] = cplx(std::norm(phi.values[i]), 0.0);
    ComplexField v = riesz_potential(rho);
    double pot = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        pot += v.values[i].real() * rho.values[i].real();
    e.potential = pot * phi.grid.cell_volume();
    e.total = e.kinetic + mu * e.potential;
    return e;
}

EnergyBreakdown modified_energy(const ComplexField& phi,
                                const MultiplierSpec& spec, double mu) {
    return energy(apply_I(phi, spec), mu);
}

SandwichReport h1_of_I(const ComplexField& phi, const MultiplierSpec& spec) {
    SandwichReport r;
    r.h1_of_I = sobolev_norm(apply_I(phi, spec), 1.0, DerivKind::inhomogeneous);
    r.hs = sobolev_norm(phi, spec.s, DerivKind::inhomogeneous);
    if (r.hs == 0.0 || r.h1_of_I == 0.0) {
        r.valid = false;
        return r;
    }
    r.upper_ratio = r.h1_of_I / (std::pow(spec.N, 1.0 - spec.s) * r.hs);
    r.lower_ratio = r.hs / r.h1_of_I;
    r.valid = true;
    return r;
}

double admissible_s_lower(int n) {
    return 2.0 * (n - 2) / (3.0 * n - 4.0);
}

double growth_exponent_alpha(double s, int n) {
    if (n < 3)
        throw std::invalid_argument("growth_exponent_alpha: requires n >= 3");
    const double lo = admissible_s_lower(n);
    if (!(s > lo && s < 1.0)) {
        std::ostringstream os;
        os << "growth_exponent_alpha: s = " << s
           << " outside the admissible open interval (" << lo << ", 1)";
        throw std::invalid_argument(os.str());
    }
    return (n - 2) * s * (1.0 - s) / (s * (3.0 * n - 4.0) - 2.0 * (n - 2));
}

double scaling_lambda(double s, double N) {
    return std::pow(N, (1.0 - s) / s);
}

double cutoff_selection_exponent(double s, int n) {
    return 1.0 - (1.0 - s) / s * 2.0 * (n - 2) / n;
}

} // namespace hrte
