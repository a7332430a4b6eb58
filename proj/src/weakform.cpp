#include "wedgeflow/weakform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wedgeflow/hypersonic.hpp"
#include "wedgeflow/quadrature.hpp"

namespace wedgeflow {

namespace {

// 53-bit uniform in [0, 1); implementation-independent for a fixed seed.
double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double dirac_force_pairing(const MeasureFamily& family, double wp,
                           const TestFunction& phi, const PairOptions& opt)
{
    if (wp == 0.0) return 0.0;
    RadonMeasure force{family.params.wedge_slope(), SectorDensity::constant(0.0),
                       {DiracPart{Ray::wedge_surface(family.params.wedge_slope()),
                                  [wp](double) { return wp; }}}};
    return pair(force, phi, FieldPart::value, opt);
}

}  // namespace

double WeakResidual::max_abs() const
{
    double m = 0.0;
    for (double v : r) m = std::max(m, std::fabs(v));
    return m;
}

WeakResidual weak_residual(const MeasureFamily& family, const TestFunction& phi,
                           const PairOptions& opt)
{
    const double e0 = family.params.e0();
    WeakResidual out;
    out.r[0] = pair(family.m[0], phi, FieldPart::ddx, opt) +
               pair(family.n[0], phi, FieldPart::ddy, opt) +
               inflow_pairing(1.0, phi, opt);
    out.r[1] = pair(family.m[1], phi, FieldPart::ddx, opt) +
               pair(family.n[1], phi, FieldPart::ddy, opt) +
               pair(family.pressure_measure, phi, FieldPart::ddx, opt) +
               dirac_force_pairing(family, family.wp1, phi, opt) +
               inflow_pairing(1.0 + family.inflow_p0, phi, opt);
    out.r[2] = pair(family.m[2], phi, FieldPart::ddx, opt) +
               pair(family.n[2], phi, FieldPart::ddy, opt) +
               pair(family.pressure_measure, phi, FieldPart::ddy, opt) +
               dirac_force_pairing(family, family.wp2, phi, opt);
    out.r[3] = pair(family.m[3], phi, FieldPart::ddx, opt) +
               pair(family.n[3], phi, FieldPart::ddy, opt) +
               inflow_pairing(e0, phi, opt);
    return out;
}

std::array<double, 2> boundary_force(const MeasureFamily& family)
{
    return {-family.wp1, -family.wp2};
}

const std::array<const char*, kMeasureComponents> kComponentNames = {
    "m0", "m1", "m2", "m3", "n0", "n1", "n2", "n3", "wp"};

double ConvergenceReport::min_fitted_order() const
{
    double m = std::numeric_limits<double>::infinity();
    for (const auto& per_phi : fitted_order)
        for (double o : per_phi) m = std::min(m, o);
    return m;
}

double ConvergenceReport::max_gap_at_bottom(int component) const
{
    double m = 0.0;
    for (const auto& per_phi : gaps)
        if (!per_phi[component].empty()) m = std::max(m, per_phi[component].back());
    return m;
}

ConvergenceReport vague_convergence(const FlowParams& params,
                                    const std::vector<TestFunction>& phis,
                                    const std::vector<double>& eps_ladder,
                                    const PairOptions& opt)
{
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (!(eps_ladder[i] > 0.0) || (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1])))
            throw std::invalid_argument(
                "vague_convergence: eps ladder must be positive and strictly "
                "decreasing");
    }
    const LimitMeasureSolution limit = limit_measure_solution(params);

    // Limit pairings, once per test function.
    std::vector<std::array<double, kMeasureComponents>> limit_pairings;
    limit_pairings.reserve(phis.size());
    for (const TestFunction& phi : phis) {
        std::array<double, kMeasureComponents> lp;
        for (int k = 0; k < 4; ++k) {
            lp[k] = pair(limit.family.m[k], phi, FieldPart::value, opt);
            lp[4 + k] = pair(limit.family.n[k], phi, FieldPart::value, opt);
        }
        lp[8] = 0.0;  // the limit pressure measure vanishes
        limit_pairings.push_back(lp);
    }

    ConvergenceReport report;
    report.eps_ladder = eps_ladder;
    report.gaps.resize(phis.size());
    report.fitted_order.resize(phis.size());

    for (double eps : eps_ladder) {
        const ShockSolution sol =
            solve_downstream(FlowParams(params.theta, eps, params.e0prime));
        const MeasureFamily fam = eps_measure_family(sol);
        for (std::size_t pi = 0; pi < phis.size(); ++pi) {
            for (int k = 0; k < 4; ++k) {
                report.gaps[pi][k].push_back(std::fabs(
                    pair(fam.m[k], phis[pi], FieldPart::value, opt) -
                    limit_pairings[pi][k]));
                report.gaps[pi][4 + k].push_back(std::fabs(
                    pair(fam.n[k], phis[pi], FieldPart::value, opt) -
                    limit_pairings[pi][4 + k]));
            }
            report.gaps[pi][8].push_back(std::fabs(
                pair(fam.pressure_measure, phis[pi], FieldPart::value, opt)));
        }
    }

    for (std::size_t pi = 0; pi < phis.size(); ++pi)
        for (int k = 0; k < kMeasureComponents; ++k)
            report.fitted_order[pi][k] =
                fit_loglog_order(report.eps_ladder, report.gaps[pi][k]);
    return report;
}

double pair_flux_y_eta_route(const ShockSolution& sol, int component,
                             const TestFunction& phi, const PairOptions& opt)
{
    const double a = sol.params.wedge_slope();
    const double inv_a = 1.0 / a;
    const double inv_sg = 1.0 / sol.sigma;
    const FluxPair up = flux(sol.upstream, sol.params);
    const FluxPair down = flux(sol.downstream, sol.params);
    const double g_up = up.g[component];
    const double g_down = down.g[component];

    const Box box = phi.support();
    const double bx0 = box.x0;
    const double bx1 = box.x1;
    if (!(box.y1 > 0.0) || !(bx1 > 0.0)) return 0.0;

    // y-abscissae where the eta-piece topology changes.
    std::vector<double> ybks{std::max(box.y0, 0.0), box.y1};
    const double ylo = ybks[0];
    const double yhi = ybks[1];
    if (!(yhi > ylo)) return 0.0;
    for (double xedge : {bx0, bx1}) {
        if (xedge <= 0.0) continue;
        for (double slope : {a, sol.sigma}) {
            const double yb = slope * xedge;
            if (yb > ylo && yb < yhi) ybks.push_back(yb);
        }
    }
    std::sort(ybks.begin(), ybks.end());
    ybks.erase(std::unique(ybks.begin(), ybks.end(),
                           [&](double p, double q) { return q - p < 1e-14 * yhi; }),
               ybks.end());

    std::vector<double> yn, yw, en, ew, contributions;
    for (std::size_t k = 0; k + 1 < ybks.size(); ++k) {
        yn.clear();
        yw.clear();
        quad::append_panel_nodes(ybks[k], ybks[k + 1], opt.panels_y, yn, yw);
        for (std::size_t i = 0; i < yn.size(); ++i) {
            const double y = yn[i];
            const double elo = std::max(bx0 / y, 0.0);
            const double ehi = std::min(bx1 / y, inv_a);
            if (!(ehi > elo)) continue;

            double inner = 0.0;
            const double esplit = inv_sg;
            struct Piece {
                double lo, hi, gval;
            };
            Piece pieces[2];
            int np = 0;
            if (esplit > elo && esplit < ehi) {
                pieces[np++] = {elo, esplit, g_up};
                pieces[np++] = {esplit, ehi, g_down};
            } else {
                const double mid = 0.5 * (elo + ehi);
                pieces[np++] = {elo, ehi, mid < esplit ? g_up : g_down};
            }
            for (int p = 0; p < np; ++p) {
                if (pieces[p].gval == 0.0) continue;
                en.clear();
                ew.clear();
                quad::append_panel_nodes(pieces[p].lo, pieces[p].hi, opt.panels_x, en, ew);
                double piece_sum = 0.0;
                for (std::size_t j = 0; j < en.size(); ++j)
                    piece_sum += ew[j] * phi.value(en[j] * y, y);
                inner += pieces[p].gval * piece_sum;
            }
            contributions.push_back(yw[i] * y * inner);
        }
    }
    return quad::pairwise_sum(contributions);
}

double pair_flux_y_direct(const MeasureFamily& family, int component,
                          const TestFunction& phi, const PairOptions& opt)
{
    double out = pair(family.n[component], phi, FieldPart::value, opt);
    if (component == 2)
        out += pair(family.pressure_measure, phi, FieldPart::value, opt);
    return out;
}

std::vector<TestFunction> stratified_battery(const FlowParams& params, int count,
                                             std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const double a = params.wedge_slope();
    std::vector<TestFunction> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        switch (i % 3) {
            case 0: {  // support straddles the wedge surface
                const double r = 0.08 + 0.12 * uniform01(rng);
                const double t = std::max(r + 0.02, 0.25 + 1.0 * uniform01(rng));
                out.emplace_back(t, a * t, r, r);
                break;
            }
            case 1: {  // support straddles the inflow line x = 0
                const double r = 0.08 + 0.12 * uniform01(rng);
                const double yc = 0.3 + 1.2 * uniform01(rng);
                out.emplace_back(0.0, yc, r, r);
                break;
            }
            default: {  // support strictly inside the flow domain
                const double r = 0.06 + 0.10 * uniform01(rng);
                const double xc = std::max(r + 0.05, 0.3 + 0.9 * uniform01(rng));
                const double yc = a * (xc + r) + r + 0.05 + 0.5 * uniform01(rng);
                out.emplace_back(xc, yc, r, r);
                break;
            }
        }
    }
    return out;
}

std::vector<TestFunction> wedge_battery(const FlowParams& params, int count,
                                        std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const double a = params.wedge_slope();
    std::vector<TestFunction> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        // Ranges keep the bump large against the shock strip at the ladder
        // top, away from the corner where the concentrated weights vanish,
        // and lifted enough that the wedge trace stays small.
        const double r = 0.10 + 0.04 * uniform01(rng);
        const double t = 0.20 + 0.10 * uniform01(rng);
        const double lift = 0.74 + 0.12 * uniform01(rng);
        out.emplace_back(t, a * t + lift * r, r, r);
    }
    return out;
}

}  // namespace wedgeflow
