#include "wedgeflow/measure.hpp"

#include <algorithm>
#include <cmath>

#include "wedgeflow/quadrature.hpp"
#include "wedgeflow/simd/kernels.hpp"

namespace wedgeflow {

namespace {

simd::BumpPart to_bump_part(FieldPart p)
{
    switch (p) {
        case FieldPart::value: return simd::BumpPart::value;
        case FieldPart::ddx: return simd::BumpPart::ddx;
        default: return simd::BumpPart::ddy;
    }
}

void push_breakpoint(std::vector<double>& v, double x, double lo, double hi)
{
    if (x > lo && x < hi) v.push_back(x);
}

void sort_dedupe(std::vector<double>& v, double tol)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [tol](double a, double b) { return b - a < tol; }),
            v.end());
}

// Nodes and weights of the AC integration over supp(phi) ∩ Omega, panel
// edges aligned with the support box, the wedge line and the jump ray so the
// integrand is polynomial on every panel (hence integrated exactly).
void enumerate_region_nodes(const SectorDensity& ac, double wedge_slope,
                            const Box& box, const PairOptions& opt,
                            std::vector<double>& xs, std::vector<double>& ys,
                            std::vector<double>& qw)
{
    const double bx0 = std::max(box.x0, 0.0);
    const double bx1 = box.x1;
    if (!(bx1 > bx0)) return;
    const double a = wedge_slope;
    const double sg = ac.split_sigma;

    std::vector<double> bks{bx0, bx1};
    for (double ell : {a, sg}) {
        if (ell > 0.0) {
            push_breakpoint(bks, box.y0 / ell, bx0, bx1);
            push_breakpoint(bks, box.y1 / ell, bx0, bx1);
        }
    }
    sort_dedupe(bks, 1e-14 * (bx1 - bx0));

    std::vector<double> xn, xw, yn, yw;
    for (std::size_t k = 0; k + 1 < bks.size(); ++k) {
        xn.clear();
        xw.clear();
        quad::append_panel_nodes(bks[k], bks[k + 1], opt.panels_x, xn, xw);
        for (std::size_t i = 0; i < xn.size(); ++i) {
            const double x = xn[i];
            const double ylo = std::max(box.y0, a * x);
            const double yhi = box.y1;
            if (!(yhi > ylo)) continue;

            double pieces[3];
            int np = 0;
            pieces[np++] = ylo;
            if (sg > 0.0 && sg * x > ylo && sg * x < yhi) pieces[np++] = sg * x;
            pieces[np++] = yhi;

            for (int p = 0; p + 1 < np; ++p) {
                yn.clear();
                yw.clear();
                quad::append_panel_nodes(pieces[p], pieces[p + 1], opt.panels_y, yn, yw);
                for (std::size_t j = 0; j < yn.size(); ++j) {
                    xs.push_back(x);
                    ys.push_back(yn[j]);
                    qw.push_back(xw[i] * yw[j]);
                }
            }
        }
    }
}

double pair_ac(const SectorDensity& ac, double wedge_slope, const TestFunction& phi,
               FieldPart part, const PairOptions& opt)
{
    if (ac.is_zero()) return 0.0;

    std::vector<double> xs, ys, qw;
    enumerate_region_nodes(ac, wedge_slope, phi.support(), opt, xs, ys, qw);
    if (xs.empty()) return 0.0;

    std::vector<double> vals(xs.size());
    const simd::BumpSpec spec{phi.cx(), phi.cy(), 1.0 / phi.rx(), 1.0 / phi.ry()};
    simd::bump_kernel()(spec, to_bump_part(part), xs.data(), ys.data(), qw.data(),
                        vals.data(), xs.size());
    simd::sector_kernel()(ac.split_sigma, ac.upstream,
                          ac.split_sigma > 0.0 ? ac.downstream : ac.upstream,
                          xs.data(), ys.data(), vals.data(), xs.size());
    return quad::pairwise_sum(vals);
}

double pair_dirac(const DiracPart& d, const TestFunction& phi, FieldPart part,
                  const PairOptions& opt)
{
    const auto window = d.curve.clip_to_box(phi.support());
    if (!window) return 0.0;
    const double t0 = (*window)[0];
    const double t1 = (*window)[1];
    if (!(t1 > t0)) return 0.0;

    const double sp = d.curve.speed();
    std::vector<double> tn, tw;
    quad::append_panel_nodes(t0, t1, opt.panels_line, tn, tw);
    std::vector<double> vals(tn.size());
    for (std::size_t i = 0; i < tn.size(); ++i) {
        const auto pt = d.curve.at(tn[i]);
        double f;
        switch (part) {
            case FieldPart::value: f = phi.value(pt[0], pt[1]); break;
            case FieldPart::ddx: f = phi.ddx(pt[0], pt[1]); break;
            default: f = phi.ddy(pt[0], pt[1]); break;
        }
        vals[i] = tw[i] * d.weight(tn[i]) * f * sp;
    }
    return quad::pairwise_sum(vals);
}

}  // namespace

double Ray::speed() const
{
    return std::sqrt(dir[0] * dir[0] + dir[1] * dir[1]);
}

std::array<double, 2> Ray::at(double t) const
{
    return {origin[0] + t * dir[0], origin[1] + t * dir[1]};
}

std::array<double, 2> Ray::unit_normal() const
{
    const double sp = speed();
    return {dir[1] / sp, -dir[0] / sp};
}

std::optional<std::array<double, 2>> Ray::clip_to_box(const Box& box) const
{
    double lo = 0.0;
    double hi = t_end;
    const double bounds[2][2] = {{box.x0, box.x1}, {box.y0, box.y1}};
    for (int k = 0; k < 2; ++k) {
        if (dir[k] == 0.0) {
            if (origin[k] < bounds[k][0] || origin[k] > bounds[k][1]) return std::nullopt;
            continue;
        }
        double ta = (bounds[k][0] - origin[k]) / dir[k];
        double tb = (bounds[k][1] - origin[k]) / dir[k];
        if (ta > tb) std::swap(ta, tb);
        lo = std::max(lo, ta);
        hi = std::min(hi, tb);
    }
    if (!(hi > lo)) return std::nullopt;
    return std::array<double, 2>{lo, hi};
}

Ray Ray::wedge_surface(double wedge_slope)
{
    return Ray{{0.0, 0.0}, {1.0, wedge_slope},
               std::numeric_limits<double>::infinity()};
}

Ray Ray::shock_front(double sigma)
{
    return Ray{{0.0, 0.0}, {1.0, sigma}, std::numeric_limits<double>::infinity()};
}

TestFunction::TestFunction(double cx, double cy, double rx, double ry)
    : cx_(cx), cy_(cy), rx_(rx), ry_(ry)
{
    if (!(rx > 0.0) || !(ry > 0.0))
        throw std::invalid_argument("TestFunction: radii must be positive");
}

double TestFunction::value(double x, double y) const
{
    double out;
    const double qw = 1.0;
    simd::bump_weighted_scalar({cx_, cy_, 1.0 / rx_, 1.0 / ry_},
                               simd::BumpPart::value, &x, &y, &qw, &out, 1);
    return out;
}

double TestFunction::ddx(double x, double y) const
{
    double out;
    const double qw = 1.0;
    simd::bump_weighted_scalar({cx_, cy_, 1.0 / rx_, 1.0 / ry_},
                               simd::BumpPart::ddx, &x, &y, &qw, &out, 1);
    return out;
}

double TestFunction::ddy(double x, double y) const
{
    double out;
    const double qw = 1.0;
    simd::bump_weighted_scalar({cx_, cy_, 1.0 / rx_, 1.0 / ry_},
                               simd::BumpPart::ddy, &x, &y, &qw, &out, 1);
    return out;
}

Box TestFunction::support() const
{
    return {cx_ - rx_, cx_ + rx_, cy_ - ry_, cy_ + ry_};
}

double pair(const RadonMeasure& mu, const TestFunction& phi, FieldPart part,
            const PairOptions& opt)
{
    double total = pair_ac(mu.ac, mu.wedge_slope, phi, part, opt);
    for (const DiracPart& d : mu.dirac) total += pair_dirac(d, phi, part, opt);
    return total;
}

double inflow_pairing(double coefficient, const TestFunction& phi,
                      const PairOptions& opt)
{
    if (coefficient == 0.0) return 0.0;
    const Box box = phi.support();
    if (!(box.x0 < 0.0 && box.x1 > 0.0)) return 0.0;  // phi(0, .) vanishes
    const double ylo = std::max(box.y0, 0.0);
    const double yhi = box.y1;
    if (!(yhi > ylo)) return 0.0;
    return coefficient * quad::integrate(ylo, yhi, opt.panels_line,
                                         [&phi](double y) { return phi.value(0.0, y); });
}

DiracPart jump_concentration(const ScalarField& f, const ScalarField& g,
                             const Ray& curve)
{
    auto weight = [f, g, curve](double t) -> double {
        const auto q = curve.at(t);
        const auto nrm = curve.unit_normal();
        const double scale = 1.0 + std::sqrt(q[0] * q[0] + q[1] * q[1]);

        // One-sided limits by Richardson extrapolation, 2 f(h/2) - f(h),
        // which is exact for piecewise-constant fields and second order for
        // smooth ones.
        auto one_sided = [&](const ScalarField& fld, double side, double h) {
            const double far = fld(q[0] + side * h * nrm[0], q[1] + side * h * nrm[1]);
            const double near =
                fld(q[0] + side * 0.5 * h * nrm[0], q[1] + side * 0.5 * h * nrm[1]);
            return 2.0 * near - far;
        };
        auto jump_at = [&](double h) {
            const double fj = one_sided(f, -1.0, h) - one_sided(f, +1.0, h);
            const double gj = one_sided(g, -1.0, h) - one_sided(g, +1.0, h);
            return fj * nrm[0] + gj * nrm[1];
        };

        double h = 1e-6 * scale;
        double prev = jump_at(h);
        for (int it = 0; it < 4; ++it) {
            h *= 0.5;
            const double cur = jump_at(h);
            if (std::fabs(cur - prev) <= 1e-9 * (1.0 + std::fabs(cur))) return cur;
            prev = cur;
        }
        throw std::runtime_error(
            "jump_concentration: one-sided limits did not stabilize");
    };
    return DiracPart{curve, weight};
}

LimitMeasureSolution limit_measure_solution(const FlowParams& params)
{
    const double s = std::sin(params.theta);
    const double c = std::cos(params.theta);
    const double a = params.wedge_slope();
    const double e0 = params.e0();
    const Ray wedge = Ray::wedge_surface(a);

    auto linear_weight = [](double k) {
        return [k](double t) { return k * t; };
    };
    auto on_wedge = [&](double k) {
        return std::vector<DiracPart>{DiracPart{wedge, linear_weight(k)}};
    };

    LimitMeasureSolution out{
        MeasureFamily{params, {}, {}, RadonMeasure{a, SectorDensity::constant(0.0), {}},
                      0.0, 0.0, 0.0},
        RadonMeasure{a, SectorDensity::constant(1.0), on_wedge(s / (c * c))},
        c * c,
        s * c,
        1.0,
        0.0,
        s * s};

    MeasureFamily& fam = out.family;
    fam.m[0] = RadonMeasure{a, SectorDensity::constant(1.0), on_wedge(s)};
    fam.n[0] = RadonMeasure{a, SectorDensity::constant(0.0), on_wedge(s * s / c)};
    fam.m[1] = RadonMeasure{a, SectorDensity::constant(1.0), on_wedge(s * c * c)};
    fam.n[1] = RadonMeasure{a, SectorDensity::constant(0.0), on_wedge(s * s * c)};
    fam.m[2] = RadonMeasure{a, SectorDensity::constant(0.0), on_wedge(s * s * c)};
    fam.n[2] = RadonMeasure{a, SectorDensity::constant(0.0), on_wedge(s * s * s)};
    fam.m[3] = RadonMeasure{a, SectorDensity::constant(e0), on_wedge(e0 * s)};
    fam.n[3] = RadonMeasure{a, SectorDensity::constant(0.0), on_wedge(e0 * s * s / c)};
    fam.wp1 = -(s * s * s);
    fam.wp2 = s * s * c;
    fam.inflow_p0 = 0.0;  // the pressure measure vanishes in the limit
    return out;
}

MeasureFamily eps_measure_family(const ShockSolution& sol)
{
    const FlowParams& p = sol.params;
    const double a = p.wedge_slope();
    const double sg = sol.sigma;
    const GasState& d = sol.downstream;
    const double p1 = pressure(d, p);
    const double p0 = p.p0();
    const double e0 = p.e0();

    auto split = [sg, a](double up, double down) {
        return RadonMeasure{a, SectorDensity::split(up, down, sg), {}};
    };

    MeasureFamily fam{p, {}, {}, split(p0, p1), 0.0, 0.0, p0};
    fam.m[0] = split(1.0, d.rho * d.u);
    fam.n[0] = split(0.0, d.rho * d.v);
    fam.m[1] = split(1.0, d.rho * d.u * d.u);
    fam.n[1] = split(0.0, d.rho * d.u * d.v);
    fam.m[2] = split(0.0, d.rho * d.u * d.v);
    fam.n[2] = split(0.0, d.rho * d.v * d.v);
    fam.m[3] = split(e0, d.rho * d.u * e0);
    fam.n[3] = split(0.0, d.rho * d.v * e0);
    // Parallel to the wedge normal by construction, so wp1 + a*wp2 = 0 holds
    // exactly in floating point.
    fam.wp2 = p1 / std::sqrt(1.0 + a * a);
    fam.wp1 = -(a * fam.wp2);
    return fam;
}

}  // namespace wedgeflow
