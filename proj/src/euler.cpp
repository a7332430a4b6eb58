#include "wedgeflow/euler.hpp"

#include <cmath>

namespace wedgeflow {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInternalEnergyFloor = 1e-14;
}  // namespace

void FlowParams::validate() const
{
    if (!(theta > 0.0 && theta < 0.5 * kPi))
        throw std::invalid_argument("FlowParams: theta must lie in (0, pi/2)");
    if (!(eps >= 0.0))
        throw std::invalid_argument("FlowParams: eps = gamma - 1 must be >= 0");
    if (!(e0prime > 0.0))
        throw std::invalid_argument("FlowParams: e0prime = E0 - 1/2 must be > 0");
}

double FlowParams::wedge_slope() const
{
    return std::tan(theta);
}

double FlowParams::mach0() const
{
    if (!(eps > 0.0))
        throw std::domain_error("mach0: undefined at eps = 0 (sound speed degenerates)");
    return 1.0 / std::sqrt(eps * e0prime);
}

double FlowParams::p0() const
{
    return eps / (eps + 1.0) * e0prime;
}

FlowParams FlowParams::from_degrees(double theta_deg, double eps, double e0prime)
{
    return FlowParams(theta_deg * kPi / 180.0, eps, e0prime);
}

double pressure(const GasState& state, const FlowParams& params)
{
    if (!(state.rho > 0.0))
        throw std::domain_error("pressure: rho must be positive");
    const double eint = state.internal_energy();
    if (!(eint > kInternalEnergyFloor))
        throw std::domain_error("pressure: non-positive internal energy");
    return eint * params.eps / (params.eps + 1.0) * state.rho;
}

SoundSpeedMach sound_speed_mach(const GasState& state, const FlowParams& params)
{
    if (!(params.eps > 0.0))
        throw std::domain_error("sound_speed_mach: eps = 0 has no finite Mach number");
    const double p = pressure(state, params);
    if (!(p > 0.0))
        throw std::domain_error("sound_speed_mach: non-positive pressure");
    const double c = std::sqrt(params.gamma() * p / state.rho);
    return {c, std::sqrt(state.speed2()) / c};
}

FluxPair flux(const GasState& state, const FlowParams& params)
{
    const double p = pressure(state, params);  // exactly 0 when eps = 0
    const double mx = state.rho * state.u;
    const double my = state.rho * state.v;
    FluxPair out;
    out.f = {mx, mx * state.u + p, mx * state.v, mx * state.e};
    out.g = {my, my * state.u, my * state.v + p, my * state.e};
    return out;
}

GasState upstream_state(const FlowParams& params)
{
    return {1.0, 1.0, 0.0, params.e0()};
}

}  // namespace wedgeflow
