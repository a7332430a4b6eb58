#pragma once

#include <array>
#include <vector>

#include "wedgeflow/euler.hpp"

namespace wedgeflow {

/// Attached oblique-shock solution: the downstream state on the wedge side,
/// the shock slope sigma = tan(alpha), and the upstream reference state.
struct ShockSolution {
    FlowParams params;
    GasState upstream;    ///< always (1, 1, 0, E0)
    GasState downstream;  ///< satisfies slip v1 = a*u1 and E1 = E0
    double sigma;         ///< shock slope, (1 - u1)/v1
    double alpha;         ///< shock angle, atan(sigma)
};

/// A point on the shock polar curve in the (u, v)-plane.
struct PolarPoint {
    double u;
    double v;
};

/// Cubic residual whose roots in (0, 1) are downstream u-candidates with the
/// slip condition imposed:
///   H(u) = (1-u)^2 (u - lambda - 2 lambda E0') - a^2 u^2 (1 - u + 2 lambda E0'),
/// lambda = eps/(eps+2). Total on (0, 1); callers do their own admissibility.
double polar_residual(double u, const FlowParams& params);

/// Solves the attached-shock problem for eps > 0. Picks the admissible root
/// with the largest u (the branch continuously connected to cos^2(theta) as
/// eps -> 0); enforces p1 > p0 and a < sigma before returning.
/// Throws ShockDetached when no admissible root exists, RootBracketFailure on
/// an internal numerical fault, std::invalid_argument for eps = 0.
ShockSolution solve_downstream(const FlowParams& params);

/// (F(V1) - F(V0)) - (1/sigma) (G(V1) - G(V0)); zero to round-off for any
/// valid solution.
std::array<double, 4> rh_residual(const ShockSolution& sol);

double rh_residual_max(const ShockSolution& sol);

/// n >= 2 points (u, +v(u)) sweeping the admissible u-interval of the polar
/// curve, endpoints included. Throws std::domain_error when the interval is
/// empty.
std::vector<PolarPoint> sample_polar(const FlowParams& params, int n);

/// The self-similar piecewise-constant field V(x/y): V0 ahead of the shock
/// ray, V1 behind it. (x, y) must lie strictly inside the flow domain and off
/// the shock ray.
GasState evaluate_solution(const ShockSolution& sol, double x, double y);

}  // namespace wedgeflow
