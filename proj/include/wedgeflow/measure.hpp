#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "wedgeflow/euler.hpp"
#include "wedgeflow/shock_polar.hpp"

namespace wedgeflow {

struct Box {
    double x0, x1, y0, y1;
    bool empty() const { return !(x1 > x0) || !(y1 > y0); }
};

/// Support curve of a Dirac part: the affine ray origin + t*dir for
/// t in [0, t_end). The constructed solutions only ever concentrate on rays
/// from the origin (the wedge surface and shock fronts), so the general
/// piecewise-C1 curve class is deliberately narrowed to this.
struct Ray {
    std::array<double, 2> origin{0.0, 0.0};
    std::array<double, 2> dir{1.0, 0.0};
    double t_end = std::numeric_limits<double>::infinity();

    double speed() const;
    std::array<double, 2> at(double t) const;

    /// Unit normal: tangent rotated clockwise by pi/2. For the wedge surface
    /// this is (a, -1)/sqrt(1+a^2), the outward normal of the flow domain.
    std::array<double, 2> unit_normal() const;

    /// Parameter window where the ray meets the closed box, empty if none.
    std::optional<std::array<double, 2>> clip_to_box(const Box& box) const;

    /// The wedge surface parametrized by x: t -> (t, a t), speed sqrt(1+a^2).
    static Ray wedge_surface(double wedge_slope);
    /// The shock front t -> (t, sigma t).
    static Ray shock_front(double sigma);
};

/// Weighted Dirac measure on a ray; pairs as
/// integral of w(t) phi(x(t), y(t)) speed dt.
/// All constructed solutions use (piecewise-)polynomial weights of degree
/// <= 1, for which the fixed quadrature below is exact.
struct DiracPart {
    Ray curve;
    std::function<double(double)> weight;
};

/// Absolutely continuous density on the flow domain: piecewise constant with
/// an optional jump across the ray y = split_sigma * x (split_sigma = 0
/// means no jump, the upstream value holds everywhere).
struct SectorDensity {
    double upstream = 0.0;
    double downstream = 0.0;
    double split_sigma = 0.0;

    bool is_zero() const { return upstream == 0.0 && downstream == 0.0; }
    double operator()(double x, double y) const
    {
        if (split_sigma == 0.0) return upstream;
        return split_sigma * x < y ? upstream : downstream;
    }
    static SectorDensity constant(double c) { return {c, c, 0.0}; }
    static SectorDensity split(double up, double down, double sigma)
    {
        return {up, down, sigma};
    }
};

/// Radon measure of the paper's class: an AC part on the wedge-exterior
/// domain Omega = {x > 0, y > a x} plus weighted Dirac parts on rays.
struct RadonMeasure {
    double wedge_slope = 1.0;  ///< a; fixes Omega for the AC integration
    SectorDensity ac;
    std::vector<DiracPart> dirac;
};

/// Compactly supported C^2 bump phi(x,y) = B((x-cx)/rx) B((y-cy)/ry) with
/// B(s) = (1-s^2)^3 on |s| < 1. Gradient is analytic.
class TestFunction {
public:
    TestFunction(double cx, double cy, double rx, double ry);

    double value(double x, double y) const;
    double ddx(double x, double y) const;
    double ddy(double x, double y) const;
    Box support() const;

    double cx() const { return cx_; }
    double cy() const { return cy_; }
    double rx() const { return rx_; }
    double ry() const { return ry_; }

private:
    double cx_, cy_, rx_, ry_;
};

enum class FieldPart { value, ddx, ddy };

struct PairOptions {
    int panels_x = 2;      ///< panels per smooth x-interval
    int panels_y = 8;      ///< panels per smooth y-piece (covers the shock strip)
    int panels_line = 4;   ///< panels for 1D (Dirac / inflow) integrals
};

/// <mu, part(phi)>: tensor Gauss-Legendre over supp(phi) intersected with
/// Omega, with panel edges aligned to the support box, the wedge surface and
/// the jump ray, plus the 1D pairings of every Dirac part. Deterministic
/// node enumeration and pairwise summation throughout.
double pair(const RadonMeasure& mu, const TestFunction& phi,
            FieldPart part = FieldPart::value, const PairOptions& opt = {});

/// integral of c * phi(0, y) over y > 0 -- the inflow boundary pairing.
double inflow_pairing(double coefficient, const TestFunction& phi,
                      const PairOptions& opt = {});

using ScalarField = std::function<double(double, double)>;

/// The Dirac weight that the distributional divergence of (f, g) concentrates
/// on the curve: w(t) = [[f]] n_x + [[g]] n_y from one-sided limits, with the
/// normal convention of Ray::unit_normal. Zero weight on a curve across which
/// the one-dimensional jump conditions hold.
DiracPart jump_concentration(const ScalarField& f, const ScalarField& g,
                             const Ray& curve);

/// One family of measures satisfying the weak-form equations: the eight
/// transport components, the pressure measure, and the wedge-surface force
/// weights. Covers both the eps > 0 families and the singular limit.
struct MeasureFamily {
    FlowParams params;
    std::array<RadonMeasure, 4> m;  ///< x-components, indices 0..3
    std::array<RadonMeasure, 4> n;  ///< y-components
    RadonMeasure pressure_measure;  ///< the scalar pressure measure
    double wp1 = 0.0;               ///< wedge force weight, x-equation
    double wp2 = 0.0;               ///< wedge force weight, y-equation
    double inflow_p0 = 0.0;         ///< upstream pressure in the inflow terms
};

/// The singular limit solution: Dirac parts on the wedge surface carrying the
/// concentrated mass/momentum/energy, plus the traces that identify it.
struct LimitMeasureSolution {
    MeasureFamily family;
    RadonMeasure density;       ///< the density measure (AC part + wedge Dirac)
    double u_on_wedge;          ///< cos^2(theta)
    double v_on_wedge;          ///< sin(theta) cos(theta)
    double u_interior;          ///< 1
    double v_interior;          ///< 0
    double surface_pressure;    ///< sin^2(theta)
};

LimitMeasureSolution limit_measure_solution(const FlowParams& params);

/// The measure family of a piecewise-constant shock solution (eps > 0):
/// absolutely continuous densities built from the solution field, no Dirac
/// parts in the interior, and boundary weights proportional to p1.
MeasureFamily eps_measure_family(const ShockSolution& sol);

}  // namespace wedgeflow
