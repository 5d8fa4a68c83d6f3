#pragma once

#include "hrte/integrator.hpp"

namespace hrte {

// ||phi||_{L_t^q L_x^r} over the sampled trajectory: trapezoid quadrature in
// t of the recorded instantaneous L^r norms (the (target, r) pair must have
// been registered with the diagnostics engine). q = inf returns the max.
double spacetime_norm(const Trajectory& traj, double q, double r,
                      StTarget target = StTarget::phi);

enum class BoundKind { l4_3d, admissible_pair, I_version };

struct FittedConstant {
    double C = 0;
    double lhs = 0;
    double rhs = 0;
    bool valid = false; // false when rhs == 0 (ratio undefined)
};

// Empirical constant C = LHS / RHS for one of the space-time inequalities:
//   l4_3d (n = 3):    LHS = ||phi||^2_{L^4_{t,x}},
//                     RHS = ||phi_0||_{L^2} * sup_t ||phi||_{Hdot^{1/2}}
//   admissible_pair:  LHS = ||phi||_{L_t^q L_x^r}, (q,r) = (4(n-1)/n, 2(n-1)/(n-2)),
//                     RHS = T^{(n-2)/(4(n-1))} ||phi_0||^{1/2}_{L^2}
//                           * (sup_t ||phi||_{Hdot^{1/2}})^{(n-2)/(n-1)}
//   I_version:        same pair norm of I phi against
//                     T^{(n-2)/(4(n-1))} ( (sup_t ||I phi||_{L^2})^{1/(n-1)}
//                       * (sup_t ||I phi||_{Hdot^{1/2}})^{(n-2)/(n-1)}
//                       + (sup_t ||I phi||_{Hdot^{1/2}})^{(2n-6)/(2n-3)} ).
FittedConstant check_morawetz_bound(const Trajectory& traj, int n,
                                    BoundKind which);

// The admissible pair (4(n-1)/n, 2(n-1)/(n-2)) used by the bounds above.
StPair morawetz_pair(int n, StTarget target);

} // namespace hrte
