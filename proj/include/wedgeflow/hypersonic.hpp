#pragma once

#include <array>
#include <span>

#include "wedgeflow/euler.hpp"
#include "wedgeflow/shock_polar.hpp"

namespace wedgeflow {

/// Closed-form limits and first-order rates of the shock family as
/// eps -> 0 at fixed (theta, E0'). Implemented independently of the polar
/// solver so each side can serve as the other's oracle.
struct LimitState {
    double u_lim;             ///< cos^2(theta)
    double v_lim;             ///< sin(theta) cos(theta)
    double p_lim;             ///< sin^2(theta), the sine-squared surface pressure
    double eps_rho_lim;       ///< lim eps * rho1 = 2 sin^2(theta) / (2 E0' + sin^2(theta))
    double sigma_slope;       ///< d sigma / d eps = (sin^2(theta)/2 + E0') / (cos^3(theta) sin(theta))
    double mass_weight_rate;  ///< lim rho1 (sigma - a) = sin(theta)/cos^3(theta)
    double u_slope;           ///< d u1 / d eps = -(E0' + sin^2(theta)/2)
};

LimitState limit_state(const FlowParams& params);

/// Fixed eps > 0, E0' -> 0 regime: the polar collapses onto a circle and the
/// density stays bounded (no concentration).
struct LowEnergyLimit {
    double rho_lim;        ///< (eps+2)/eps
    double circle_center;  ///< u-coordinate of the circle center, (eps+1)/(eps+2)
    double circle_radius;  ///< 1/(eps+2)
    std::array<PolarPoint, 2> intersections;  ///< both circle/slip-line points
};

/// Throws std::domain_error (NoIntersection) when
/// theta >= arcsin(1/(eps+1)). theta = 0 is the degenerate on-axis case.
LowEnergyLimit low_energy_limit(double eps, double theta);

/// First-order predictions u1 ~ cos^2(theta) + u_slope*eps and
/// sigma ~ a + sigma_slope*eps, with v1 from the slip condition.
struct AsymptoticPrediction {
    double u1;
    double v1;
    double sigma;
};

AsymptoticPrediction asymptotic_prediction(const FlowParams& params, double eps_small);

/// Least-squares slope of log|gap| vs log(eps). Points with |gap| below the
/// floor are dropped; returns NaN when fewer than three points survive.
double fit_loglog_order(std::span<const double> eps, std::span<const double> gap,
                        double floor = 1e-300);

}  // namespace wedgeflow
