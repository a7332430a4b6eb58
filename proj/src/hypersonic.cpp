#include "wedgeflow/hypersonic.hpp"

#include <cmath>
#include <limits>
#include <span>

namespace wedgeflow {

LimitState limit_state(const FlowParams& params)
{
    const double s = std::sin(params.theta);
    const double c = std::cos(params.theta);
    LimitState out;
    out.u_lim = c * c;
    out.v_lim = s * c;
    out.p_lim = s * s;
    out.eps_rho_lim = 2.0 * s * s / (2.0 * params.e0prime + s * s);
    out.sigma_slope = (0.5 * s * s + params.e0prime) / (c * c * c * s);
    out.mass_weight_rate = s / (c * c * c);
    out.u_slope = -(params.e0prime + 0.5 * s * s);
    return out;
}

LowEnergyLimit low_energy_limit(double eps, double theta)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("low_energy_limit: requires eps > 0");
    if (!(theta >= 0.0))
        throw std::invalid_argument("low_energy_limit: theta must be >= 0");

    LowEnergyLimit out;
    out.rho_lim = (eps + 2.0) / eps;
    out.circle_center = (eps + 1.0) / (eps + 2.0);
    out.circle_radius = 1.0 / (eps + 2.0);

    if (!(std::sin(theta) < 1.0 / (eps + 1.0)))
        throw std::domain_error(
            "low_energy_limit: no intersection, theta >= arcsin(1/(eps+1))");

    // Intersection of v = u tan(theta) with the circle:
    // (1+a^2) u^2 - 2 h u + (h^2 - r^2) = 0.
    const double a = std::tan(theta);
    const double h = out.circle_center;
    const double r = out.circle_radius;
    const double one_a2 = 1.0 + a * a;
    const double disc = h * h - one_a2 * (h * h - r * r);
    const double root = std::sqrt(std::max(disc, 0.0));
    const double u_minus = (h - root) / one_a2;
    const double u_plus = (h + root) / one_a2;
    out.intersections = {PolarPoint{u_minus, a * u_minus}, PolarPoint{u_plus, a * u_plus}};
    return out;
}

AsymptoticPrediction asymptotic_prediction(const FlowParams& params, double eps_small)
{
    if (!(eps_small >= 0.0))
        throw std::invalid_argument("asymptotic_prediction: eps must be >= 0");
    const LimitState lim = limit_state(params);
    AsymptoticPrediction out;
    out.u1 = lim.u_lim + lim.u_slope * eps_small;
    out.v1 = params.wedge_slope() * out.u1;
    out.sigma = params.wedge_slope() + lim.sigma_slope * eps_small;
    return out;
}

double fit_loglog_order(std::span<const double> eps, std::span<const double> gap,
                        double floor)
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < eps.size() && i < gap.size(); ++i) {
        if (!(gap[i] > floor) || !(eps[i] > 0.0)) continue;
        const double x = std::log(eps[i]);
        const double y = std::log(gap[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 3) return std::numeric_limits<double>::quiet_NaN();
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

}  // namespace wedgeflow
