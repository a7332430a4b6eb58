#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wedgeflow/euler.hpp"

using namespace wedgeflow;

namespace {
double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}
}  // namespace

TEST_CASE("pressure of the normalized inflow state")
{
    // p0 = eps/(eps+1) * E0' for the state (1, 1, 0, E0)
    for (double eps : {1e-6, 0.4, 1.0, 2.0}) {
        for (double e0p : {0.1, 1.0, 2.5}) {
            const FlowParams params(0.5, eps, e0p);
            const double p0 = pressure(upstream_state(params), params);
            CHECK(p0 == doctest::Approx(eps / (eps + 1.0) * e0p).epsilon(1e-15));
            CHECK(p0 == doctest::Approx(params.p0()).epsilon(1e-15));
        }
    }
}

TEST_CASE("pressure vanishes identically at eps = 0")
{
    const FlowParams params(0.7, 0.0, 1.0);
    CHECK(pressure({1.0, 1.0, 0.0, 1.5}, params) == 0.0);
    CHECK(pressure({3.7, 0.2, -0.4, 9.0}, params) == 0.0);
}

TEST_CASE("pressure hand-evaluated closure")
{
    // rho=2, u=v=0, E=1, eps=1: p = (1 - 0) * 1/2 * 2 = 1
    const FlowParams params(0.5, 1.0, 1.0);
    CHECK(pressure({2.0, 0.0, 0.0, 1.0}, params) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pressure rejects non-positive internal energy")
{
    const FlowParams params(0.5, 0.4, 1.0);
    CHECK_THROWS_AS(pressure({1.0, 1.0, 1.0, 1.0}, params), std::domain_error);
    CHECK_THROWS_AS(pressure({1.0, 2.0, 0.0, 2.0}, params), std::domain_error);
    CHECK_THROWS_AS(pressure({-1.0, 0.0, 0.0, 1.0}, params), std::domain_error);
}

TEST_CASE("upstream Mach number matches the gamma equivalence")
{
    // M0^2 = 1/(eps * E0')
    {
        const FlowParams params(0.5, 1.0, 1.0);
        const auto cm = sound_speed_mach(upstream_state(params), params);
        CHECK(cm.mach == doctest::Approx(1.0).epsilon(1e-14));
    }
    {
        const FlowParams params(0.5, 0.4, 0.1);
        const auto cm = sound_speed_mach(upstream_state(params), params);
        CHECK(cm.mach == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(params.mach0() == doctest::Approx(5.0).epsilon(1e-14));
    }
    {
        const FlowParams params(0.5, 2.0, 0.5);
        const auto cm = sound_speed_mach(upstream_state(params), params);
        CHECK(cm.mach * cm.mach == doctest::Approx(1.0 / (2.0 * 0.5)).epsilon(1e-13));
    }
}

TEST_CASE("sound speed degenerates at eps = 0")
{
    const FlowParams params(0.5, 0.0, 1.0);
    CHECK_THROWS_AS(sound_speed_mach(upstream_state(params), params), std::domain_error);
    CHECK_THROWS_AS(params.mach0(), std::domain_error);
}

TEST_CASE("flux of the upstream state")
{
    const FlowParams params(0.5, 0.4, 1.0);
    const GasState u0 = upstream_state(params);
    const FluxPair fp = flux(u0, params);
    const double p0 = params.p0();
    const double e0 = params.e0();
    // v = 0 kills all v-weighted entries of G
    CHECK(fp.g[0] == 0.0);
    CHECK(fp.g[1] == 0.0);
    CHECK(fp.g[2] == doctest::Approx(p0).epsilon(1e-15));
    CHECK(fp.g[3] == 0.0);
    CHECK(fp.f[0] == doctest::Approx(1.0));
    CHECK(fp.f[1] == doctest::Approx(1.0 + p0).epsilon(1e-15));
    CHECK(fp.f[2] == 0.0);
    CHECK(fp.f[3] == doctest::Approx(e0).epsilon(1e-15));
}

TEST_CASE("flux hand-evaluated state")
{
    // (2,1,1,3) at eps=1: p = (3-1) * 1/2 * 2 = 2
    const FlowParams params(0.5, 1.0, 1.0);
    const GasState st{2.0, 1.0, 1.0, 3.0};
    const FluxPair fp = flux(st, params);
    CHECK(fp.f == std::array<double, 4>{2.0, 4.0, 2.0, 6.0});
    CHECK(fp.g == std::array<double, 4>{2.0, 2.0, 4.0, 6.0});
}

TEST_CASE("pressure is linear in density")
{
    const FlowParams params(0.5, 0.7, 1.3);
    std::mt19937_64 rng(91);
    for (int i = 0; i < 200; ++i) {
        const double rho = uniform(rng, 0.1, 5.0);
        const double u = uniform(rng, -1.0, 1.0);
        const double v = uniform(rng, -1.0, 1.0);
        const double e = 0.5 * (u * u + v * v) + uniform(rng, 0.1, 3.0);
        const double k = uniform(rng, 0.5, 4.0);
        const double p1 = pressure({rho, u, v, e}, params);
        const double p2 = pressure({k * rho, u, v, e}, params);
        CHECK(p2 == doctest::Approx(k * p1).epsilon(1e-14));
    }
}

TEST_CASE("flux and pressure agree through the momentum entries")
{
    // f[1] - f[0]*u = p = g[2] - g[0]*v
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const FlowParams params(0.5, uniform(rng, 1e-3, 2.0), uniform(rng, 0.2, 2.0));
        const double rho = uniform(rng, 0.1, 5.0);
        const double u = uniform(rng, -1.5, 1.5);
        const double v = uniform(rng, -1.5, 1.5);
        const double e = 0.5 * (u * u + v * v) + uniform(rng, 0.1, 3.0);
        const GasState st{rho, u, v, e};
        const double p = pressure(st, params);
        const FluxPair fp = flux(st, params);
        CHECK(fp.f[1] - fp.f[0] * u == doctest::Approx(p).epsilon(1e-12));
        CHECK(fp.g[2] - fp.g[0] * v == doctest::Approx(p).epsilon(1e-12));
        // mass-flux consistency
        CHECK(fp.f[0] * v == doctest::Approx(fp.g[0] * u).epsilon(1e-13));
    }
}

TEST_CASE("pressureless fluxes at eps = 0")
{
    const FlowParams params(0.6, 0.0, 1.0);
    const GasState st{2.0, 0.5, -0.25, 1.0};
    const FluxPair fp = flux(st, params);
    CHECK(fp.f[0] == 2.0 * 0.5);
    CHECK(fp.f[1] == 2.0 * 0.5 * 0.5);
    CHECK(fp.f[2] == 2.0 * 0.5 * -0.25);
    CHECK(fp.f[3] == 2.0 * 0.5 * 1.0);
    CHECK(fp.g[0] == 2.0 * -0.25);
    CHECK(fp.g[2] == 2.0 * 0.25 * 0.25);  // rho v^2, no pressure
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(FlowParams(0.0, 0.4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FlowParams(2.0, 0.4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FlowParams(0.5, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FlowParams(0.5, 0.4, 0.0), std::invalid_argument);
    CHECK_NOTHROW(FlowParams::from_degrees(45.0, 0.4, 1.0));
}
