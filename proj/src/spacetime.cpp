#include "hrte/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrte {

namespace {

std::size_t find_pair(const std::vector<StPair>& pairs, double r,
                      StTarget target) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].target == target && pairs[i].r == r) return i;
    throw std::invalid_argument(
        "spacetime_norm: no registered accumulator for the requested (target, r)");
}

double sup_over_records(const Trajectory& traj,
                        double (*pick)(const DiagnosticsRecord&)) {
    double m = 0.0;
    for (const auto& rec : traj.records) m = std::max(m, pick(rec));
    return m;
}

} // namespace

double spacetime_norm(const Trajectory& traj, double q, double r,
                      StTarget target) {
    if (traj.records.empty())
        throw std::invalid_argument("spacetime_norm: empty trajectory");
    const std::size_t i = find_pair(traj.pairs, r, target);
    if (std::isinf(q)) {
        double m = 0.0;
        for (const auto& rec : traj.records) m = std::max(m, rec.st_inst[i]);
        return m;
    }
    double sum = 0.0;
    for (std::size_t k = 1; k < traj.records.size(); ++k) {
        const double dt = traj.records[k].t - traj.records[k - 1].t;
        const double a = std::pow(traj.records[k - 1].st_inst[i], q);
        const double b = std::pow(traj.records[k].st_inst[i], q);
        sum += 0.5 * (a + b) * dt;
    }
    return std::pow(sum, 1.0 / q);
}

StPair morawetz_pair(int n, StTarget target) {
    return StPair{target, 4.0 * (n - 1) / n, 2.0 * (n - 1) / (n - 2)};
}

FittedConstant check_morawetz_bound(const Trajectory& traj, int n,
                                    BoundKind which) {
    if (traj.records.empty())
        throw std::invalid_argument("check_morawetz_bound: empty trajectory");
    FittedConstant fit;
    const double T = traj.records.back().t;
    const double mass0 = traj.records.front().mass;
    const double l2_0 = std::sqrt(mass0);

    switch (which) {
        case BoundKind::l4_3d: {
            if (n != 3)
                throw std::invalid_argument(
                    "check_morawetz_bound: l4_3d requires n = 3");
            const double l4 = spacetime_norm(traj, 4.0, 4.0, StTarget::phi);
            const double hhalf_sup = sup_over_records(
                traj, [](const DiagnosticsRecord& r) { return r.hhalf_phi; });
            fit.lhs = l4 * l4;
            fit.rhs = l2_0 * hhalf_sup;
            break;
        }
        case BoundKind::admissible_pair: {
            const StPair p = morawetz_pair(n, StTarget::phi);
            const double lhs = spacetime_norm(traj, p.q, p.r, StTarget::phi);
            const double hhalf_sup = sup_over_records(
                traj, [](const DiagnosticsRecord& r) { return r.hhalf_phi; });
            fit.lhs = lhs;
            fit.rhs = std::pow(T, (n - 2.0) / (4.0 * (n - 1.0))) *
                      std::sqrt(l2_0) *
                      std::pow(hhalf_sup, (n - 2.0) / (n - 1.0));
            break;
        }
        case BoundKind::I_version: {
            const StPair p = morawetz_pair(n, StTarget::iphi);
            const double lhs = spacetime_norm(traj, p.q, p.r, StTarget::iphi);
            const double l2_sup = sup_over_records(
                traj, [](const DiagnosticsRecord& r) { return r.l2_iphi; });
            const double hhalf_sup = sup_over_records(
                traj, [](const DiagnosticsRecord& r) { return r.hhalf_iphi; });
            fit.lhs = lhs;
            fit.rhs = std::pow(T, (n - 2.0) / (4.0 * (n - 1.0))) *
                      (std::pow(l2_sup, 1.0 / (n - 1.0)) *
                           std::pow(hhalf_sup, (n - 2.0) / (n - 1.0)) +
                       std::pow(hhalf_sup, (2.0 * n - 6.0) / (2.0 * n - 3.0)));
            break;
        }
    }
    if (fit.rhs == 0.0) {
        fit.valid = false;
        return fit;
    }
    fit.C = fit.lhs / fit.rhs;
    fit.valid = true;
    return fit;
}

} // namespace hrte
