#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wedgeflow/measure.hpp"

namespace wedgeflow {

/// Left-hand sides of the four weak-form equations (mass, x-momentum,
/// y-momentum, energy) evaluated against one test function. All four vanish
/// to quadrature tolerance for an exact measure solution.
struct WeakResidual {
    std::array<double, 4> r;
    double max_abs() const;
};

WeakResidual weak_residual(const MeasureFamily& family, const TestFunction& phi,
                           const PairOptions& opt = {});

/// -(wp1, wp2): the force per unit area exerted on the wedge surface.
/// Magnitude sin^2(theta) for the limit family, p1 for an eps family.
std::array<double, 2> boundary_force(const MeasureFamily& family);

inline constexpr int kMeasureComponents = 9;  // m0..m3, n0..n3, pressure
extern const std::array<const char*, kMeasureComponents> kComponentNames;

/// Pairing gaps |<mu(eps), phi> - <mu(0), phi>| per measure component and
/// test function over a decreasing eps ladder, with fitted log-log orders.
struct ConvergenceReport {
    std::vector<double> eps_ladder;
    /// gaps[phi][component][ladder index]
    std::vector<std::array<std::vector<double>, kMeasureComponents>> gaps;
    /// fitted_order[phi][component]; NaN when too few usable points
    std::vector<std::array<double, kMeasureComponents>> fitted_order;

    double min_fitted_order() const;
    double max_gap_at_bottom(int component) const;
};

ConvergenceReport vague_convergence(const FlowParams& params,
                                    const std::vector<TestFunction>& phis,
                                    const std::vector<double>& eps_ladder,
                                    const PairOptions& opt = {});

/// Pairing of phi with the k-th y-flux component of the shock solution field
/// evaluated through the self-similar variable eta = x/y (outer integral in
/// y, inner in eta). Independent evaluation route used to cross-check the
/// direct two-dimensional pairing. Component 2 includes the pressure.
double pair_flux_y_eta_route(const ShockSolution& sol, int component,
                             const TestFunction& phi, const PairOptions& opt = {});

/// Same quantity through the direct 2D route: <n^k(eps), phi>, plus the
/// pressure pairing for the y-momentum component.
double pair_flux_y_direct(const MeasureFamily& family, int component,
                          const TestFunction& phi, const PairOptions& opt = {});

/// Deterministic battery of bump test functions: at least one third of the
/// supports meet the wedge surface, at least one third meet the inflow line,
/// the rest sit in the interior.
std::vector<TestFunction> stratified_battery(const FlowParams& params, int count,
                                             std::uint64_t seed);

/// Battery for convergence studies: every support straddles the wedge
/// surface (the only place the limit measures concentrate), with small radii
/// and near-origin centers so the pressure pairings are already tiny at the
/// ladder bottom.
std::vector<TestFunction> wedge_battery(const FlowParams& params, int count,
                                        std::uint64_t seed);

}  // namespace wedgeflow
