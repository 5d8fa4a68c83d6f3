#include "hrte/integrator.hpp"

#include <cmath>
#include <sstream>

#include "hrte/errors.hpp"
#include "hrte/fft.hpp"
#include "hrte/riesz.hpp"

namespace hrte {

void SimConfig::validate() const {
    grid.validate();
    if (!(dt > 0)) throw ConfigError("SimConfig: dt must be > 0");
    if (!(T > 0)) throw ConfigError("SimConfig: T must be > 0");
    if (!(N >= 1)) throw ConfigError("SimConfig: N must be >= 1");
    if (!(s > 0 && s < 1)) throw ConfigError("SimConfig: s must lie in (0,1)");
    if (mu != 1.0 && mu != -1.0 && mu != 0.0)
        throw ConfigError("SimConfig: mu must be +1, -1 or 0");
    if (sample_every < 1)
        throw ConfigError("SimConfig: sample_every must be >= 1");
    const double ny = grid.nyquist();
    const double max_xi2 = grid.n * ny * ny; // corner mode
    if (!(dt * max_xi2 / 2.0 < 2.0 * M_PI)) {
        std::ostringstream os;
        os << "SimConfig: dt * max|xi|^2 / 2 = " << dt * max_xi2 / 2.0
           << " violates the phase-wrap guard (< 2*pi)";
        throw ConfigError(os.str());
    }
}

long SimConfig::total_steps() const {
    const long steps = std::lround(T / dt);
    return steps > 0 ? steps : 1;
}

namespace {

// exp(-i |xi|^2 dt / 4) on the full lattice.
std::vector<cplx> make_half_kick(const GridSpec& g, double dt) {
    std::vector<cplx> kick(g.size());
    for_each_mode(g, [&](std::size_t flat, const int*, double xi2) {
        const double phase = -xi2 * dt / 4.0;
        kick[flat] = cplx(std::cos(phase), std::sin(phase));
    });
    return kick;
}

void half_kick_inplace(ComplexField& phi, const std::vector<cplx>& kick) {
    SpectralCoeffs c = forward_transform(phi);
    for (std::size_t i = 0; i < c.size(); ++i) c.coeffs[i] *= kick[i];
    phi = inverse_transform(c);
}

void nonlinear_kick_inplace(ComplexField& phi, double dt, double mu) {
    if (mu == 0.0) return;
    ComplexField rho(phi.grid);
    for (std::size_t i = 0; i < phi.size(); ++i)
        rho.values[i] = cplx(std::norm(phi.values[i]), 0.0);
    const ComplexField v = riesz_potential(rho);
    for (std::size_t i = 0; i < phi.size(); ++i)
        phi.values[i] *= std::polar(1.0, -mu * dt * v.values[i].real());
}

bool all_finite(const ComplexField& f) {
    for (const auto& z : f.values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

} // namespace

ComplexField step_strang(const ComplexField& phi, double dt, double mu) {
    const std::vector<cplx> kick = make_half_kick(phi.grid, dt);
    ComplexField out = phi;
    half_kick_inplace(out, kick);
    nonlinear_kick_inplace(out, dt, mu);
    half_kick_inplace(out, kick);
    return out;
}

Trajectory evolve(const SimConfig& cfg, const ComplexField& phi0,
                  DiagnosticsEngine& engine,
                  const std::vector<SampleObserver>& observers) {
    cfg.validate();
    if (!(phi0.grid == cfg.grid))
        throw ConfigError("evolve: initial data grid does not match config");

    const long total = cfg.total_steps();
    const std::vector<cplx> kick = make_half_kick(cfg.grid, cfg.dt);

    Trajectory traj;
    traj.pairs = engine.options().pairs;
    ComplexField phi = phi0;
    double mass0 = -1.0;
    long samples_taken = 0;

    auto take_sample = [&](long step, double t) {
        if (!all_finite(phi))
            throw IntegratorBreakdown(
                "integrator breakdown: non-finite state", step, t);
        DiagnosticsRecord rec = engine.sample(step, t, phi);
        if (mass0 < 0) mass0 = rec.mass;
        const double drift = mass0 > 0 ? std::abs(rec.mass - mass0) / mass0
                                       : std::abs(rec.mass);
        if (!(drift <= 1e-6))
            throw IntegratorBreakdown(
                "integrator breakdown: relative mass drift " +
                    std::to_string(drift),
                step, t);
        const bool keep_state =
            step == 0 || step == total ||
            (cfg.keep_state_every > 0 &&
             samples_taken % cfg.keep_state_every == 0);
        if (keep_state) traj.checkpoints.emplace_back(t, phi);
        for (const auto& obs : observers) obs(rec, phi);
        traj.records.push_back(std::move(rec));
        ++samples_taken;
    };

    take_sample(0, 0.0);

    // The state lives in spectral form between nonlinear kicks; the two half
    // kicks surrounding a sample-free step boundary are applied back to back
    // without a round trip. Same arithmetic as repeated step_strang up to the
    // skipped inverse/forward pairs.
    SpectralCoeffs c = forward_transform(phi);
    for (long step = 1; step <= total; ++step) {
        try {
            for (std::size_t i = 0; i < c.size(); ++i) c.coeffs[i] *= kick[i];
            if (cfg.mu != 0.0) {
                phi = inverse_transform(c);
                nonlinear_kick_inplace(phi, cfg.dt, cfg.mu);
                c = forward_transform(phi);
            }
            for (std::size_t i = 0; i < c.size(); ++i) c.coeffs[i] *= kick[i];
        } catch (const IntegratorBreakdown&) {
            throw;
        } catch (const std::exception& e) {
            throw IntegratorBreakdown(
                std::string("integrator breakdown: ") + e.what(), step,
                step * cfg.dt);
        }
        if (step % cfg.sample_every == 0 || step == total) {
            phi = inverse_transform(c);
            take_sample(step, step * cfg.dt);
        }
    }

    traj.final_state = std::move(phi); // total is always a sample step
    traj.final_time = total * cfg.dt;
    return traj;
}

ComplexField scale_field(const ComplexField& phi, double lambda) {
    if (!(lambda > 0))
        throw std::invalid_argument("scale_field: lambda must be > 0");
    const GridSpec& g = phi.grid;
    if (lambda == 1.0) return phi;

    const double j_real = std::log2(lambda);
    const double j_round = std::round(j_real);
    const bool dyadic = std::abs(j_real - j_round) < 1e-12;

    if (!dyadic) {
        // Same sample count, relabeled box: the samples are exactly the
        // band-limited interpolation of lambda^{-n/2} phi(x/lambda) at the
        // target grid points.
        ComplexField out(GridSpec(g.n, g.M, lambda * g.L));
        const double amp = std::pow(lambda, -0.5 * g.n);
        for (std::size_t i = 0; i < phi.size(); ++i)
            out.values[i] = amp * phi.values[i];
        return out;
    }

    const int j = static_cast<int>(j_round);
    const int factor = 1 << std::abs(j);
    GridSpec target;
    if (j > 0) {
        target = GridSpec(g.n, g.M * factor, g.L * factor);
    } else {
        if (g.M / factor < 4)
            throw std::invalid_argument(
                "scale_field: target grid would be smaller than 4 per axis");
        target = GridSpec(g.n, g.M / factor, g.L / factor);
    }

    // Same integer mode k carries the coefficient: xi = (2 pi / L) k maps to
    // xi / lambda = (2 pi / (lambda L)) k.
    const SpectralCoeffs src = forward_transform(phi);
    SpectralCoeffs dst(target);
    const double amp = std::pow(lambda, -0.5 * g.n);
    double dropped2 = 0.0, total2 = 0.0;
    std::vector<int> kvec(g.n), tidx(g.n);
    for_each_index(g, [&](std::size_t flat, const int* idx) {
        const double a2 = std::norm(src.coeffs[flat]);
        total2 += a2;
        bool fits = true;
        for (int a = 0; a < g.n; ++a) {
            kvec[a] = g.mode_of_index(idx[a]);
            if (kvec[a] < -target.M / 2 || kvec[a] >= target.M / 2) fits = false;
        }
        if (!fits) {
            dropped2 += a2;
            return;
        }
        for (int a = 0; a < g.n; ++a)
            tidx[a] = kvec[a] >= 0 ? kvec[a] : kvec[a] + target.M;
        dst.coeffs[flatten(target, tidx.data())] = amp * src.coeffs[flat];
    });
    if (dropped2 > 1e-24 * total2)
        throw std::invalid_argument(
            "scale_field: data does not fit the scaled lattice "
            "(high modes would be lost)");
    return inverse_transform(dst);
}

} // namespace hrte
