#include "hrte/diagnostics.hpp"

#include <cmath>
#include <cstdio>

#include "hrte/fft.hpp"
#include "hrte/norms.hpp"
#include "hrte/rng.hpp"

namespace hrte {

std::string StPair::column_name() const {
    const char* tag = target == StTarget::phi      ? "phi"
                      : target == StTarget::iphi   ? "iphi"
                                                   : "bessel_iphi";
    char buf[64];
    if (std::isinf(q))
        std::snprintf(buf, sizeof(buf), "st_%s_qinf_r%g", tag, r);
    else
        std::snprintf(buf, sizeof(buf), "st_%s_q%g_r%g", tag, q, r);
    return buf;
}

DiagnosticsRecord DiagnosticsEngine::sample(long step, double t,
                                            const ComplexField& phi) {
    DiagnosticsRecord rec;
    rec.step = step;
    rec.t = t;
    rec.mass = mass(phi);

    // one spectrum of phi serves every spectral quantity below
    const SpectralCoeffs c = forward_transform(phi);
    rec.energy = energy(phi, c, opt_.mu).total;
    rec.h_s_norm = sobolev_norm(c, opt_.s, DerivKind::inhomogeneous);
    rec.hhalf_phi = sobolev_norm(c, 0.5, DerivKind::homogeneous);

    SpectralCoeffs ci = c;
    for_each_mode(ci.grid, [&](std::size_t flat, const int*, double xi2) {
        ci.coeffs[flat] *= multiplier_m(std::sqrt(xi2), opt_.ispec);
    });
    const ComplexField iphi = inverse_transform(ci);
    rec.modified_energy = energy(iphi, ci, opt_.mu).total;
    rec.h1_of_I = sobolev_norm(ci, 1.0, DerivKind::inhomogeneous);
    rec.l2_iphi = l2_norm(iphi);
    rec.hhalf_iphi = sobolev_norm(ci, 0.5, DerivKind::homogeneous);

    std::optional<ComplexField> bessel_iphi;
    rec.st_inst.resize(opt_.pairs.size());
    rec.st_accum.resize(opt_.pairs.size());
    for (std::size_t i = 0; i < opt_.pairs.size(); ++i) {
        const StPair& p = opt_.pairs[i];
        const ComplexField* target = &phi;
        if (p.target == StTarget::iphi) {
            target = &iphi;
        } else if (p.target == StTarget::bessel_iphi) {
            if (!bessel_iphi) {
                SpectralCoeffs cb = ci;
                for_each_mode(cb.grid,
                              [&](std::size_t flat, const int*, double xi2) {
                                  cb.coeffs[flat] *= std::sqrt(1.0 + xi2);
                              });
                bessel_iphi = inverse_transform(cb);
            }
            target = &*bessel_iphi;
        }
        const double norm_r = lebesgue_norm(*target, p.r);
        accums_[i].add(norm_r, t);
        rec.st_inst[i] = norm_r;
        rec.st_accum[i] = accums_[i].sum;
    }

    if (opt_.morawetz_sampler) {
        if (opt_.morawetz_exact) {
            rec.morawetz = interaction_potential_exact(phi);
            rec.morawetz_stderr = 0.0;
        } else {
            // decorrelate draws across samples, deterministically
            PairSampler s = *opt_.morawetz_sampler;
            s.seed = rng::combine(rng::mix(s.seed),
                                  static_cast<std::uint64_t>(step));
            const McEstimate e = interaction_potential(phi, s);
            rec.morawetz = e.value;
            rec.morawetz_stderr = e.stderr_;
        }
    }
    return rec;
}

} // namespace hrte
