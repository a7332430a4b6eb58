#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "wedgeflow/quadrature.hpp"

using namespace wedgeflow;

TEST_CASE("single-panel rule integrates monomials up to degree 31 exactly")
{
    for (int d = 0; d <= 31; ++d) {
        const double got = quad::integrate(-1.0, 1.0, 1,
                                           [d](double x) { return std::pow(x, d); });
        const double want = (d % 2 == 1) ? 0.0 : 2.0 / (d + 1);
        CHECK(got == doctest::Approx(want).epsilon(1e-13));
        if (d % 2 == 1) CHECK(std::fabs(got) < 1e-15);
    }
}

TEST_CASE("weights sum to the interval length")
{
    std::vector<double> nodes, weights;
    quad::append_panel_nodes(0.25, 3.5, 7, nodes, weights);
    CHECK(nodes.size() == 7 * 16);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    CHECK(total == doctest::Approx(3.25).epsilon(1e-14));
    for (std::size_t i = 1; i < nodes.size(); ++i) CHECK(nodes[i] > nodes[i - 1]);
}

TEST_CASE("composite rule converges on a non-polynomial integrand")
{
    const double got = quad::integrate(0.0, 1.0, 4, [](double x) { return std::exp(x); });
    CHECK(got == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("pairwise sum is deterministic and accurate")
{
    std::mt19937_64 rng(5);
    std::vector<double> v(10007);
    long double exact = 0.0L;
    for (auto& x : v) {
        x = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 1e6;
        exact += (long double)x;
    }
    const double s1 = quad::pairwise_sum(v);
    const double s2 = quad::pairwise_sum(v);
    CHECK(s1 == s2);  // bitwise repeatable
    CHECK(s1 == doctest::Approx((double)exact).epsilon(1e-12));

    CHECK(quad::pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(quad::pairwise_sum(std::vector<double>{42.0}) == 42.0);
}

TEST_CASE("degenerate intervals contribute nothing")
{
    std::vector<double> nodes, weights;
    quad::append_panel_nodes(1.0, 1.0, 4, nodes, weights);
    quad::append_panel_nodes(2.0, 1.0, 4, nodes, weights);
    CHECK(nodes.empty());
    CHECK(quad::integrate(3.0, 3.0, 2, [](double) { return 1.0; }) == 0.0);
}
