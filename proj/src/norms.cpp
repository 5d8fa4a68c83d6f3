#include "hrte/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrte {
namespace {

// |z|^p with cheap paths for the small integer exponents the diagnostics
// loop over every sample.
inline double abs_pow(const cplx& z, double p) {
    const double a2 = std::norm(z);
    if (p == 2.0) return a2;
    if (p == 4.0) return a2 * a2;
    if (p == 1.0) return std::sqrt(a2);
    if (p == 6.0) return a2 * a2 * a2;
    return std::pow(a2, 0.5 * p);
}

} // namespace

double lebesgue_norm(const ComplexField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lebesgue_norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : f.values) m = std::max(m, std::abs(z));
        return m;
    }
    double sum = 0.0;
    for (const auto& z : f.values) sum += abs_pow(z, p);
    return std::pow(sum * f.grid.cell_volume(), 1.0 / p);
}

double sobolev_norm(const SpectralCoeffs& c, double s, DerivKind kind) {
    double sum = 0.0;
    if (kind == DerivKind::homogeneous) {
        for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
            if (xi2 == 0.0) return;
            sum += std::pow(xi2, s) * std::norm(c.coeffs[flat]);
        });
    } else {
        for_each_mode(c.grid, [&](std::size_t flat, const int*, double xi2) {
            sum += std::pow(1.0 + xi2, s) * std::norm(c.coeffs[flat]);
        });
    }
    return std::sqrt(sum * c.grid.box_volume());
}

double sobolev_norm(const ComplexField& f, double s, DerivKind kind) {
    return sobolev_norm(forward_transform(f), s, kind);
}

double l2_norm(const ComplexField& f) {
    double sum = 0.0;
    for (const auto& z : f.values) sum += std::norm(z);
    return std::sqrt(sum * f.grid.cell_volume());
}

double l2_distance(const ComplexField& a, const ComplexField& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("l2_distance: grids differ");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += std::norm(a.values[i] - b.values[i]);
    return std::sqrt(sum * a.grid.cell_volume());
}

} // namespace hrte
