#include "wedgeflow/shock_polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wedgeflow {

namespace {

struct PolarCoeffs {
    // H(u) = A u^3 + B u^2 + C u + D, the expansion of the factored residual.
    long double a2;      // tan^2(theta)
    long double lambda;  // eps/(eps+2)
    long double b;       // lambda (1 + 2 E0')
    long double c;       // 2 lambda E0'
    long double A, B, C, D;
};

PolarCoeffs polar_coeffs(const FlowParams& p)
{
    PolarCoeffs k;
    const long double a = std::tan((long double)p.theta);
    k.a2 = a * a;
    k.lambda = (long double)p.eps / ((long double)p.eps + 2.0L);
    k.b = k.lambda * (1.0L + 2.0L * (long double)p.e0prime);
    k.c = 2.0L * k.lambda * (long double)p.e0prime;
    k.A = 1.0L + k.a2;
    k.B = -(2.0L + k.a2 + k.b + k.a2 * k.c);
    k.C = 1.0L + 2.0L * k.b;
    k.D = -k.b;
    return k;
}

long double eval_h(const PolarCoeffs& k, long double u)
{
    return ((k.A * u + k.B) * u + k.C) * u + k.D;
}

long double eval_dh(const PolarCoeffs& k, long double u)
{
    return (3.0L * k.A * u + 2.0L * k.B) * u + k.C;
}

long double newton_polish(const PolarCoeffs& k, long double u)
{
    for (int it = 0; it < 3; ++it) {
        const long double h = eval_h(k, u);
        const long double dh = eval_dh(k, u);
        if (dh == 0.0L) break;
        const long double step = h / dh;
        u -= step;
        if (std::fabs(step) < 1e-19L * std::max(1.0L, std::fabs(u))) break;
    }
    return u;
}

long double bisect(const PolarCoeffs& k, long double lo, long double hi)
{
    long double flo = eval_h(k, lo);
    for (int it = 0; it < 200; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const long double fm = eval_h(k, mid);
        if ((flo <= 0.0L) == (fm <= 0.0L)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// Real roots of the cubic in (0, 1), via the closed-form trigonometric /
// Cardano solution, each polished by Newton.
std::vector<long double> cubic_roots_in_unit_interval(const PolarCoeffs& k)
{
    const long double p = (3.0L * k.A * k.C - k.B * k.B) / (3.0L * k.A * k.A);
    const long double q = (2.0L * k.B * k.B * k.B - 9.0L * k.A * k.B * k.C +
                           27.0L * k.A * k.A * k.D) /
                          (27.0L * k.A * k.A * k.A);
    const long double shift = -k.B / (3.0L * k.A);
    const long double disc = 4.0L * p * p * p + 27.0L * q * q;

    std::vector<long double> roots;
    if (disc <= 0.0L && p < 0.0L) {
        // three real roots
        const long double m = 2.0L * std::sqrt(-p / 3.0L);
        long double arg = 3.0L * q / (p * m);
        arg = std::clamp(arg, -1.0L, 1.0L);
        const long double phi = std::acos(arg) / 3.0L;
        for (int j = 0; j < 3; ++j) {
            const long double t =
                m * std::cos(phi - 2.0L * 3.14159265358979323846264338L * j / 3.0L);
            roots.push_back(t + shift);
        }
    } else {
        // one real root
        const long double r = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
        const long double u3 = -q / 2.0L + r;
        const long double v3 = -q / 2.0L - r;
        const long double cb = [](long double s) {
            return s >= 0.0L ? std::pow(s, 1.0L / 3.0L) : -std::pow(-s, 1.0L / 3.0L);
        }(u3);
        const long double cb2 = [](long double s) {
            return s >= 0.0L ? std::pow(s, 1.0L / 3.0L) : -std::pow(-s, 1.0L / 3.0L);
        }(v3);
        roots.push_back(cb + cb2 + shift);
    }

    std::vector<long double> out;
    for (long double r : roots) {
        if (!(r > 0.0L && r < 1.0L)) continue;
        r = newton_polish(k, r);
        if (r > 0.0L && r < 1.0L) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Fallback: sample H at 64 points over (0,1) and bisect every sign-change
// bracket. Used when the closed form returns nothing usable.
std::vector<long double> bracketed_roots(const PolarCoeffs& k)
{
    constexpr int kSamples = 64;
    std::vector<long double> out;
    long double prev_u = 1e-9L;
    long double prev_h = eval_h(k, prev_u);
    for (int i = 1; i <= kSamples; ++i) {
        const long double u = (long double)i / kSamples - (i == kSamples ? 1e-9L : 0.0L);
        const long double h = eval_h(k, u);
        if ((prev_h <= 0.0L) != (h <= 0.0L))
            out.push_back(newton_polish(k, bisect(k, prev_u, u)));
        prev_u = u;
        prev_h = h;
    }
    return out;
}

}  // namespace

double polar_residual(double u, const FlowParams& params)
{
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("polar_residual: u must lie in (0, 1)");
    return (double)eval_h(polar_coeffs(params), (long double)u);
}

ShockSolution solve_downstream(const FlowParams& params)
{
    if (!(params.eps > 0.0))
        throw std::invalid_argument(
            "solve_downstream: eps = 0 requested; the limit state is a measure, "
            "use the hypersonic-limit interface");

    const PolarCoeffs k = polar_coeffs(params);
    std::vector<long double> roots = cubic_roots_in_unit_interval(k);
    if (roots.empty()) roots = bracketed_roots(k);

    const long double a = std::tan((long double)params.theta);
    const long double eps = params.eps;
    const long double e0p = params.e0prime;
    const long double p0 = eps / (eps + 1.0L) * e0p;

    // Weakest admissible shock: largest root passing the entropy condition
    // and lying strictly between the wedge surface and the inflow direction.
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        const long double u1 = *it;
        const long double v1 = a * u1;
        if (!(v1 > 0.0L)) continue;
        const long double sigma = (1.0L - u1) / v1;
        if (!(sigma > a)) continue;
        const long double s2a = sigma * sigma / (1.0L + sigma * sigma);
        const long double rho1 = (eps + 2.0L) / eps * s2a / (2.0L * e0p + s2a);
        const long double p1 =
            (2.0L * (eps + 1.0L) * s2a - eps * eps * e0p) / ((eps + 1.0L) * (eps + 2.0L));
        if (!(p1 > p0)) continue;
        if (!(rho1 > 0.0L) || !std::isfinite((double)rho1)) continue;

        const long double coeff_scale = std::fabs(k.A) + std::fabs(k.B) +
                                        std::fabs(k.C) + std::fabs(k.D);
        if (std::fabs(eval_h(k, u1)) > 1e-12L * coeff_scale)
            throw RootBracketFailure("solve_downstream: root polish did not converge");

        ShockSolution sol{params,
                          upstream_state(params),
                          GasState{(double)rho1, (double)u1, (double)v1, params.e0()},
                          (double)sigma,
                          (double)std::atan(sigma)};
        if (!std::isfinite(sol.sigma) || !std::isfinite(sol.downstream.rho))
            throw RootBracketFailure("solve_downstream: non-finite downstream state");
        return sol;
    }

    throw ShockDetached(
        "solve_downstream: no attached oblique shock for these parameters "
        "(wedge angle beyond detachment)");
}

std::array<double, 4> rh_residual(const ShockSolution& sol)
{
    const FluxPair f1 = flux(sol.downstream, sol.params);
    const FluxPair f0 = flux(sol.upstream, sol.params);
    std::array<double, 4> r;
    for (int i = 0; i < 4; ++i)
        r[i] = (f1.f[i] - f0.f[i]) - (f1.g[i] - f0.g[i]) / sol.sigma;
    return r;
}

double rh_residual_max(const ShockSolution& sol)
{
    const auto r = rh_residual(sol);
    double m = 0.0;
    for (double v : r) m = std::max(m, std::fabs(v));
    return m;
}

std::vector<PolarPoint> sample_polar(const FlowParams& params, int n)
{
    if (!(params.eps > 0.0))
        throw std::invalid_argument("sample_polar: requires eps > 0");
    if (n < 2) throw std::invalid_argument("sample_polar: n must be >= 2");

    const double lambda = params.eps / (params.eps + 2.0);
    const double b = lambda * (1.0 + 2.0 * params.e0prime);
    const double c = 2.0 * lambda * params.e0prime;
    if (!(b < 1.0))
        throw std::domain_error("sample_polar: empty admissible u-interval");

    std::vector<PolarPoint> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double u = b + (1.0 - b) * (double)i / (n - 1);
        const double num = (1.0 - u) * (1.0 - u) * (u - b);
        const double den = 1.0 - u + c;
        const double v2 = den > 0.0 ? num / den : 0.0;
        pts.push_back({u, std::sqrt(std::max(v2, 0.0))});
    }
    return pts;
}

GasState evaluate_solution(const ShockSolution& sol, double x, double y)
{
    const double a = sol.params.wedge_slope();
    if (!(x > 0.0) || !(y > a * x))
        throw std::domain_error("evaluate_solution: point outside the flow domain");
    const double eta = x / y;
    const double eta_shock = 1.0 / sol.sigma;
    if (eta == eta_shock)
        throw std::domain_error("evaluate_solution: point lies on the shock ray");
    return eta < eta_shock ? sol.upstream : sol.downstream;
}

}  // namespace wedgeflow
