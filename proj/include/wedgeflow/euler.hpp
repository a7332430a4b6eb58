#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace wedgeflow {

/// Thrown when the wedge angle lies beyond the attached-shock regime for the
/// given parameters. Physical condition, not a numerical fault.
struct ShockDetached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when root bracketing/polishing fails even though an admissible
/// root is expected. Internal numerical fault, distinct from detachment.
struct RootBracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The three parameters of the non-dimensional wedge problem: half-opening
/// angle theta, eps = gamma - 1, and the reduced inflow energy
/// e0prime = E0 - 1/2. Inflow is normalized to rho = u = 1, v = 0.
struct FlowParams {
    double theta;    ///< wedge half-opening angle, radians, in (0, pi/2)
    double eps;      ///< gamma - 1, >= 0
    double e0prime;  ///< E0 - 1/2, > 0

    FlowParams(double theta_, double eps_, double e0prime_)
        : theta(theta_), eps(eps_), e0prime(e0prime_)
    {
        validate();
    }

    void validate() const;

    double wedge_slope() const;         ///< a = tan(theta)
    double gamma() const { return 1.0 + eps; }
    double e0() const { return e0prime + 0.5; }

    /// Upstream Mach number, sqrt(1 / (eps * e0prime)). Requires eps > 0.
    double mach0() const;

    /// Upstream pressure eps/(eps+1) * e0prime.
    double p0() const;

    static FlowParams from_degrees(double theta_deg, double eps, double e0prime);
};

/// Conservative-variable state (rho, u, v, E). Pressure is always derived
/// from the closure, never stored.
struct GasState {
    double rho;  ///< mass density, > 0
    double u;    ///< x-velocity
    double v;    ///< y-velocity
    double e;    ///< total energy per unit mass

    /// E - (u^2 + v^2)/2; must be positive for a valid state.
    double internal_energy() const { return e - 0.5 * (u * u + v * v); }
    double speed2() const { return u * u + v * v; }
};

struct FluxPair {
    std::array<double, 4> f;  ///< (rho u, rho u^2 + p, rho u v, rho u E)
    std::array<double, 4> g;  ///< (rho v, rho u v, rho v^2 + p, rho v E)
};

/// p = (E - (u^2+v^2)/2) * eps/(eps+1) * rho. Throws std::domain_error when
/// the internal energy is not positive (tolerance 1e-14, which guards the
/// low-energy sweeps where e0prime is tiny).
double pressure(const GasState& state, const FlowParams& params);

/// Sound speed c = sqrt(gamma p / rho) and Mach number |q|/c.
/// Requires eps > 0; at eps = 0 the sound speed degenerates to zero.
struct SoundSpeedMach {
    double c;
    double mach;
};
SoundSpeedMach sound_speed_mach(const GasState& state, const FlowParams& params);

/// Flux vectors F(U), G(U) with the pressure closure attached.
FluxPair flux(const GasState& state, const FlowParams& params);

/// The normalized inflow state (1, 1, 0, E0).
GasState upstream_state(const FlowParams& params);

}  // namespace wedgeflow
