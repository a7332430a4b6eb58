#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wedgeflow/hypersonic.hpp"
#include "wedgeflow/shock_polar.hpp"

using namespace wedgeflow;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("limit state at the 45 degree reference point")
{
    const LimitState lim = limit_state(FlowParams(kPi / 4.0, 0.0, 1.0));
    CHECK(lim.u_lim == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lim.v_lim == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lim.p_lim == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lim.eps_rho_lim == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(lim.mass_weight_rate == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lim.sigma_slope == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(lim.u_slope == doctest::Approx(-1.25).epsilon(1e-15));
}

TEST_CASE("limit state internal identities")
{
    for (double theta : {0.1, 0.4, kPi / 4.0, 1.2}) {
        for (double e0p : {0.3, 1.0, 2.0}) {
            const LimitState lim = limit_state(FlowParams(theta, 0.0, e0p));
            const double a = std::tan(theta);
            // slip holds in the limit
            CHECK(lim.v_lim == doctest::Approx(a * lim.u_lim).epsilon(1e-14));
            // u + p = cos^2 + sin^2 = 1
            CHECK(lim.u_lim + lim.p_lim == doctest::Approx(1.0).epsilon(1e-15));
            // sin/cos^3 = tan (1 + tan^2) to round-off
            CHECK(lim.mass_weight_rate ==
                  doctest::Approx(a * (1.0 + a * a)).epsilon(1e-14));
        }
    }
}

TEST_CASE("limit state degenerates with the wedge angle")
{
    const LimitState lim = limit_state(FlowParams(1e-8, 0.0, 1.0));
    CHECK(lim.p_lim < 1e-15);
    CHECK(lim.mass_weight_rate < 1e-7);
    CHECK(lim.u_lim == doctest::Approx(1.0));
}

TEST_CASE("limit state agrees with Richardson-extrapolated solves")
{
    const FlowParams base(kPi / 6.0, 0.0, 0.5);
    const LimitState lim = limit_state(base);
    const double e1 = 1e-4, e2 = 1e-5;
    const double u_e1 = solve_downstream(FlowParams(base.theta, e1, 0.5)).downstream.u;
    const double u_e2 = solve_downstream(FlowParams(base.theta, e2, 0.5)).downstream.u;
    // first-order extrapolation to eps = 0
    const double u_extrap = u_e2 + (u_e2 - u_e1) * e2 / (e1 - e2);
    CHECK(u_extrap == doctest::Approx(lim.u_lim).epsilon(1e-8));

    const double s_e1 = solve_downstream(FlowParams(base.theta, e1, 0.5)).sigma;
    const double s_e2 = solve_downstream(FlowParams(base.theta, e2, 0.5)).sigma;
    const double s_extrap = s_e2 + (s_e2 - s_e1) * e2 / (e1 - e2);
    CHECK(s_extrap == doctest::Approx(std::tan(base.theta)).epsilon(1e-8));
}

TEST_CASE("concentration rates converge with order about one")
{
    const FlowParams base(kPi / 4.0, 0.0, 1.0);
    const LimitState lim = limit_state(base);
    std::vector<double> ladder = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> gap_er, gap_mw, gap_u;
    for (double eps : ladder) {
        const ShockSolution sol = solve_downstream(FlowParams(base.theta, eps, 1.0));
        gap_er.push_back(std::fabs(eps * sol.downstream.rho - lim.eps_rho_lim));
        gap_mw.push_back(std::fabs(
            sol.downstream.rho * (sol.sigma - std::tan(base.theta)) -
            lim.mass_weight_rate));
        gap_u.push_back(std::fabs(sol.downstream.u - lim.u_lim));
    }
    CHECK(fit_loglog_order(ladder, gap_er) > 0.9);
    CHECK(fit_loglog_order(ladder, gap_mw) > 0.9);
    CHECK(fit_loglog_order(ladder, gap_u) > 0.9);
    // |u1 - u_lim| <= 2 |u_slope| eps across the ladder
    for (std::size_t i = 0; i < ladder.size(); ++i)
        CHECK(gap_u[i] <= 2.0 * std::fabs(lim.u_slope) * ladder[i]);
}

TEST_CASE("low-energy limit constants")
{
    const LowEnergyLimit lim = low_energy_limit(2.0, 0.3);
    CHECK(lim.rho_lim == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(lim.circle_center == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(lim.circle_radius == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("low-energy intersection points lie on circle and slip line")
{
    const double eps = 0.4, theta = 10.0 * kPi / 180.0;
    const LowEnergyLimit lim = low_energy_limit(eps, theta);
    const double a = std::tan(theta);
    for (const PolarPoint& pt : lim.intersections) {
        const double circle = (pt.u - lim.circle_center) * (pt.u - lim.circle_center) +
                              pt.v * pt.v - lim.circle_radius * lim.circle_radius;
        CHECK(std::fabs(circle) < 1e-14);
        CHECK(pt.v == doctest::Approx(a * pt.u).epsilon(1e-14));
    }
    CHECK(lim.intersections[0].u < lim.intersections[1].u);
}

TEST_CASE("low-energy degenerate zero deflection")
{
    const LowEnergyLimit lim = low_energy_limit(1.0, 0.0);
    CHECK(lim.intersections[0].u ==
          doctest::Approx(lim.circle_center - lim.circle_radius).epsilon(1e-14));
    CHECK(lim.intersections[1].u ==
          doctest::Approx(lim.circle_center + lim.circle_radius).epsilon(1e-14));
    CHECK(lim.intersections[0].v == 0.0);
    CHECK(lim.intersections[1].v == 0.0);
}

TEST_CASE("low-energy limit reports missing intersections")
{
    // theta >= arcsin(1/(eps+1))
    const double eps = 1.0;
    const double theta_max = std::asin(1.0 / (eps + 1.0));
    CHECK_THROWS_AS(low_energy_limit(eps, theta_max + 1e-6), std::domain_error);
    CHECK_NOTHROW(low_energy_limit(eps, theta_max - 1e-3));
    CHECK_THROWS_AS(low_energy_limit(0.0, 0.1), std::invalid_argument);
    // never any concentration: the density limit is finite for every eps > 0
    for (double e : {1e-3, 0.1, 1.0, 10.0})
        CHECK(std::isfinite(low_energy_limit(e, 0.0).rho_lim));
}

TEST_CASE("asymptotic prediction at the reference point")
{
    const FlowParams p(kPi / 4.0, 0.0, 1.0);
    const AsymptoticPrediction pred = asymptotic_prediction(p, 1e-5);
    CHECK(pred.sigma == doctest::Approx(1.0 + 5e-5).epsilon(1e-12));
    CHECK(pred.u1 == doctest::Approx(0.5 - 1.25e-5).epsilon(1e-12));

    const AsymptoticPrediction at_zero = asymptotic_prediction(p, 0.0);
    const LimitState lim = limit_state(p);
    CHECK(at_zero.u1 == lim.u_lim);
    CHECK(at_zero.v1 == doctest::Approx(lim.v_lim).epsilon(1e-15));
    CHECK(at_zero.sigma == doctest::Approx(std::tan(p.theta)).epsilon(1e-15));
}

TEST_CASE("prediction error is second order in eps")
{
    const FlowParams p(15.0 * kPi / 180.0, 0.0, 1.0);
    auto err = [&](double eps) {
        const double u = solve_downstream(FlowParams(p.theta, eps, 1.0)).downstream.u;
        return std::fabs(u - asymptotic_prediction(p, eps).u1);
    };
    const double e_full = err(1e-4);
    const double e_half = err(5e-5);
    // halving eps cuts the remainder by about four
    CHECK(e_full / e_half > 3.0);
    CHECK(e_full / e_half < 5.0);
    // and the remainder is tiny against the first-order term itself
    CHECK(e_full < 10.0 * 1e-4 * 1e-4 * 100.0);
}

TEST_CASE("log-log order fitting")
{
    std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<double> first{}, second{};
    for (double e : eps) {
        first.push_back(3.0 * e);
        second.push_back(0.5 * e * e);
    }
    CHECK(fit_loglog_order(eps, first) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit_loglog_order(eps, second) == doctest::Approx(2.0).epsilon(1e-12));
    // too few usable points -> NaN
    std::vector<double> zeros = {0.0, 0.0, 1e-3, 1e-4};
    CHECK(std::isnan(fit_loglog_order(eps, zeros)));
}
