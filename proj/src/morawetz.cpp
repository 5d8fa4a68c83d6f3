#include "hrte/morawetz.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hrte/fft.hpp"
#include "hrte/imethod.hpp"
#include "hrte/norms.hpp"
#include "hrte/rng.hpp"

namespace hrte {

RealVectorField momentum_density(const ComplexField& phi) {
    const GridSpec& g = phi.grid;
    RealVectorField p(g);
    SpectralCoeffs c = forward_transform(phi);
    for (int axis = 0; axis < g.n; ++axis) {
        SpectralCoeffs d = c;
        for_each_index(g, [&](std::size_t flat, const int* idx) {
            const int i = idx[axis];
            if (i == g.M / 2)
                d.coeffs[flat] = 0.0;
            else
                d.coeffs[flat] *= cplx(0.0, g.xi_of_index(i));
        });
        ComplexField grad = inverse_transform(d);
        for (std::size_t i = 0; i < phi.size(); ++i)
            p.comps[axis][i] =
                std::imag(std::conj(phi.values[i]) * grad.values[i]);
    }
    return p;
}

namespace {

// Minimum-image displacement between grid indices along one axis, in index
// units. Result lies in (-M/2, M/2]; the exact half-box offset takes the
// positive image.
inline int min_image_steps(int from, int to, int M) {
    int d = (to - from) % M;
    if (d < 0) d += M;
    if (d > M / 2) d -= M;
    return d;
}

struct Accum {
    double sum = 0, sum2 = 0;
    std::size_t count = 0;
    void add(double g) {
        sum += g;
        sum2 += g * g;
        ++count;
    }
    double mean() const { return sum / count; }
    double stderr_of_mean() const {
        const double var =
            std::max(0.0, sum2 / count - (sum / count) * (sum / count));
        return std::sqrt(var / count);
    }
};

std::vector<double> density_of(const ComplexField& phi) {
    std::vector<double> rho(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        rho[i] = std::norm(phi.values[i]);
    return rho;
}

} // namespace

McEstimate interaction_potential(const ComplexField& phi,
                                 const PairSampler& sampler) {
    if (sampler.budget == 0)
        throw std::invalid_argument("interaction_potential: budget must be > 0");
    const GridSpec& g = phi.grid;
    const std::size_t size = g.size();
    const std::vector<double> rho = density_of(phi);
    const RealVectorField p = momentum_density(phi);
    const double h = g.h();

    std::vector<int> xi(g.n), yi(g.n);
    Accum acc;
    std::size_t degenerate = 0;
    for (std::size_t draw = 0; draw < sampler.budget; ++draw) {
        const std::size_t x = rng::uniform_index(sampler.seed, draw, 0x1, size);
        const std::size_t y = rng::uniform_index(sampler.seed, draw, 0x2, size);
        if (x == y) {
            ++degenerate;
            acc.add(0.0);
            continue;
        }
        unflatten(g, x, xi.data());
        unflatten(g, y, yi.data());
        double d2 = 0.0, dot = 0.0;
        for (int a = 0; a < g.n; ++a) {
            const double d = h * min_image_steps(xi[a], yi[a], g.M);
            d2 += d * d;
            dot += p.comps[a][y] * d;
        }
        acc.add(rho[x] * dot / std::sqrt(d2));
    }
    // full sum = mean * (number of pairs) * h^{2n} = mean * L^{2n}
    const double weight = std::pow(g.L, 2 * g.n);
    McEstimate e;
    e.value = weight * acc.mean();
    e.stderr_ = weight * acc.stderr_of_mean();
    e.degenerate = degenerate;
    return e;
}

double interaction_potential_exact(const ComplexField& phi) {
    const GridSpec& g = phi.grid;
    const std::size_t size = g.size();
    if (size > 4096)
        throw std::invalid_argument(
            "interaction_potential_exact: grid too large (M^n must be <= 4096)");
    const std::vector<double> rho = density_of(phi);
    const RealVectorField p = momentum_density(phi);
    const double h = g.h();

    std::vector<int> xi(g.n), yi(g.n);
    double total = 0.0;
    for (std::size_t x = 0; x < size; ++x) {
        unflatten(g, x, xi.data());
        double inner = 0.0;
        for (std::size_t y = 0; y < size; ++y) {
            if (y == x) continue;
            unflatten(g, y, yi.data());
            double d2 = 0.0, dot = 0.0;
            for (int a = 0; a < g.n; ++a) {
                const double d = h * min_image_steps(xi[a], yi[a], g.M);
                d2 += d * d;
                dot += p.comps[a][y] * d;
            }
            inner += dot / std::sqrt(d2);
        }
        total += rho[x] * inner;
    }
    return total * std::pow(h, 2 * g.n);
}

McEstimate defocusing_term_estimate(const ComplexField& phi,
                                    const PairSampler& sampler) {
    if (sampler.budget == 0)
        throw std::invalid_argument("defocusing_term_estimate: budget must be > 0");
    const GridSpec& g = phi.grid;
    if (g.n != 3)
        throw std::invalid_argument(
            "defocusing_term_estimate: kernel form is the n = 3 one");
    const std::size_t size = g.size();
    const std::vector<double> rho = density_of(phi);
    const double h = g.h();

    std::vector<int> xi(3), yi(3), zi(3);
    Accum acc;
    std::size_t degenerate = 0;
    for (std::size_t draw = 0; draw < sampler.budget; ++draw) {
        const std::size_t x = rng::uniform_index(sampler.seed, draw, 0x11, size);
        const std::size_t y = rng::uniform_index(sampler.seed, draw, 0x12, size);
        const std::size_t z = rng::uniform_index(sampler.seed, draw, 0x13, size);
        if (x == y || x == z || y == z) {
            ++degenerate;
            acc.add(0.0);
            continue;
        }
        unflatten(g, x, xi.data());
        unflatten(g, y, yi.data());
        unflatten(g, z, zi.data());
        double yx[3], zx[3], yz[3];
        double yx2 = 0, zx2 = 0, yz2 = 0;
        for (int a = 0; a < 3; ++a) {
            yx[a] = h * min_image_steps(xi[a], yi[a], g.M);
            zx[a] = h * min_image_steps(xi[a], zi[a], g.M);
            yz[a] = h * min_image_steps(zi[a], yi[a], g.M);
            yx2 += yx[a] * yx[a];
            zx2 += zx[a] * zx[a];
            yz2 += yz[a] * yz[a];
        }
        const double inv_yx = 1.0 / std::sqrt(yx2);
        const double inv_zx = 1.0 / std::sqrt(zx2);
        const double inv_yz3 = 1.0 / (yz2 * std::sqrt(yz2));
        double dot = 0.0;
        for (int a = 0; a < 3; ++a)
            dot += (yx[a] * inv_yx - zx[a] * inv_zx) * yz[a] * inv_yz3;
        acc.add(rho[x] * rho[y] * rho[z] * dot);
    }
    const double weight = 2.0 * std::pow(g.L, 3 * g.n);
    McEstimate e;
    e.value = weight * acc.mean();
    e.stderr_ = weight * acc.stderr_of_mean();
    e.degenerate = degenerate;
    return e;
}

void SpacetimeAccumulator::add(double norm_r, double t) {
    if (std::isinf(q)) {
        sum = started ? std::max(sum, norm_r) : norm_r;
    } else if (started) {
        const double dt = t - t_now;
        if (dt < 0)
            throw std::invalid_argument("SpacetimeAccumulator: time went backwards");
        sum += std::pow(norm_r, q) * dt;
    }
    t_now = t;
    started = true;
}

double SpacetimeAccumulator::finalize() const {
    if (std::isinf(q)) return sum;
    return std::pow(sum, 1.0 / q);
}

double gn_ratio(const ComplexField& u) {
    const double m = mass(u);
    if (m == 0.0)
        throw std::invalid_argument("gn_ratio: zero field");
    const EnergyBreakdown e = energy(u, +1.0);
    if (e.kinetic == 0.0)
        throw std::invalid_argument("gn_ratio: field has no gradient content");
    return e.potential / (m * e.kinetic);
}

} // namespace hrte
