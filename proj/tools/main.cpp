// wedgeflow: oblique-shock solutions of supersonic wedge flow, their
// singular hypersonic limit, and weak-form verification of both.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedgeflow/euler.hpp"
#include "wedgeflow/hypersonic.hpp"
#include "wedgeflow/measure.hpp"
#include "wedgeflow/quadrature.hpp"
#include "wedgeflow/shock_polar.hpp"
#include "wedgeflow/weakform.hpp"
#include "svg_plot.hpp"

namespace {

using nlohmann::json;
using namespace wedgeflow;

constexpr const char* kVersion = "wedgeflow 0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitDetached = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNumerical = 4;
constexpr double kPi = 3.14159265358979323846;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ",";
        out += t.columns[i];
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += fmt17(row[i]);
        }
        out += "\n";
    }
    return out;
}

json rows_to_json(const Table& t)
{
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        rows.push_back(obj);
    }
    return rows;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << text;
}

// Options shared by the subcommands.
struct Options {
    std::optional<double> theta_deg;
    std::optional<double> theta_rad;
    std::optional<double> eps;
    std::optional<double> gamma;
    std::optional<double> m0;
    double e0prime = 1.0;
    std::string ladder_spec;
    std::string format = "csv";
    std::string out_path;
    std::string svg_path;
    std::uint64_t seed = 12345;
    std::optional<double> tol;
    std::string sweep_param = "eps";
    int points = 257;
    int battery = 50;
    bool overlay_circle = false;
};

void add_theta_flags(CLI::App* cmd, Options& o)
{
    auto* deg = cmd->add_option("--theta", o.theta_deg, "wedge half-angle, degrees");
    auto* rad = cmd->add_option("--theta-rad", o.theta_rad, "wedge half-angle, radians");
    deg->excludes(rad);
}

void add_second_param_flags(CLI::App* cmd, Options& o)
{
    auto* eps = cmd->add_option("--eps", o.eps, "gamma - 1");
    auto* gam = cmd->add_option("--gamma", o.gamma, "adiabatic exponent");
    auto* m0 = cmd->add_option("--m0", o.m0, "upstream Mach number");
    eps->excludes(gam)->excludes(m0);
    gam->excludes(m0);
}

void add_output_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
}

double resolve_theta(const Options& o)
{
    if (o.theta_deg && o.theta_rad)
        throw ConfigError("--theta and --theta-rad are mutually exclusive");
    if (o.theta_deg) return *o.theta_deg * kPi / 180.0;
    if (o.theta_rad) return *o.theta_rad;
    throw ConfigError("missing wedge angle: pass --theta or --theta-rad");
}

int second_param_count(const Options& o)
{
    return (o.eps ? 1 : 0) + (o.gamma ? 1 : 0) + (o.m0 ? 1 : 0);
}

// eps from whichever of {eps, gamma, m0} was given (Mach via the
// equivalence 1/M0^2 = eps * e0prime).
double resolve_eps(const Options& o)
{
    if (second_param_count(o) != 1)
        throw ConfigError("exactly one of --eps, --gamma, --m0 must be given");
    if (o.eps) return *o.eps;
    if (o.gamma) return *o.gamma - 1.0;
    if (!(*o.m0 > 0.0)) throw ConfigError("--m0 must be positive");
    return 1.0 / (*o.m0 * *o.m0 * o.e0prime);
}

std::vector<double> resolve_ladder(const Options& o, double def_start, double def_end,
                                   int def_points)
{
    double start = def_start, end = def_end;
    int npts = def_points;
    if (!o.ladder_spec.empty()) {
        double s, e;
        int n;
        if (std::sscanf(o.ladder_spec.c_str(), "%lf,%lf,%d", &s, &e, &n) != 3)
            throw ConfigError("--ladder expects start,end,points");
        start = s;
        end = e;
        npts = n;
    }
    if (npts < 1) throw ConfigError("ladder needs at least one point");
    if (!(start > 0.0) || !(end > 0.0)) throw ConfigError("ladder endpoints must be positive");
    if (npts == 1) return {start};
    if (!(end < start)) throw ConfigError("geometric ladder must be strictly decreasing");
    std::vector<double> out(npts);
    const double ratio = std::pow(end / start, 1.0 / (npts - 1));
    double v = start;
    for (int i = 0; i < npts; ++i) {
        out[i] = v;
        v *= ratio;
    }
    out.back() = end;
    return out;
}

json config_json(const std::string& subcommand, const Options& o)
{
    json cfg;
    cfg["subcommand"] = subcommand;
    if (o.theta_deg) cfg["theta_deg"] = *o.theta_deg;
    if (o.theta_rad) cfg["theta_rad"] = *o.theta_rad;
    if (o.eps) cfg["eps"] = *o.eps;
    if (o.gamma) cfg["gamma"] = *o.gamma;
    if (o.m0) cfg["m0"] = *o.m0;
    cfg["e0prime"] = o.e0prime;
    if (!o.ladder_spec.empty()) cfg["ladder"] = o.ladder_spec;
    cfg["format"] = o.format;
    cfg["seed"] = o.seed;
    if (o.tol) cfg["tol"] = *o.tol;
    return cfg;
}

void emit(const std::string& subcommand, const Options& o, const Table& table,
          const json& extra = json())
{
    if (o.format == "json") {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = config_json(subcommand, o);
        doc["rows"] = rows_to_json(table);
        if (!extra.is_null()) doc["report"] = extra;
        write_text(o.out_path, doc.dump(2) + "\n");
    } else {
        write_text(o.out_path, to_csv(table));
    }
}

const std::vector<std::string> kSolveColumns = {
    "eps", "gamma", "M0", "theta_deg", "alpha_deg", "sigma", "u1", "v1",
    "rho1", "p1", "eps_rho1", "rho1_times_sigma_minus_a", "rh_residual_max"};

std::vector<double> solve_row(const FlowParams& params)
{
    const ShockSolution sol = solve_downstream(params);
    const double a = params.wedge_slope();
    return {params.eps,
            params.gamma(),
            params.mach0(),
            params.theta * 180.0 / kPi,
            sol.alpha * 180.0 / kPi,
            sol.sigma,
            sol.downstream.u,
            sol.downstream.v,
            sol.downstream.rho,
            pressure(sol.downstream, params),
            params.eps * sol.downstream.rho,
            sol.downstream.rho * (sol.sigma - a),
            rh_residual_max(sol)};
}

int cmd_solve(const Options& o)
{
    const double theta = resolve_theta(o);
    const double eps = resolve_eps(o);
    if (!(eps > 0.0))
        throw ConfigError("limit state requested (eps = 0); use the 'limit' subcommand");
    Table t{kSolveColumns, {solve_row(FlowParams(theta, eps, o.e0prime))}};
    emit("solve", o, t);
    return kExitOk;
}

int cmd_sweep(const Options& o)
{
    const double theta = resolve_theta(o);
    Table t{kSolveColumns, {}};
    if (o.sweep_param == "eps") {
        if (second_param_count(o) != 0)
            throw ConfigError("sweep over eps takes its values from --ladder; "
                              "drop --eps/--gamma/--m0");
        for (double eps : resolve_ladder(o, 1e-1, 1e-6, 11))
            t.rows.push_back(solve_row(FlowParams(theta, eps, o.e0prime)));
    } else if (o.sweep_param == "e0prime") {
        if (o.m0) throw ConfigError("sweep over e0prime cannot fix eps through --m0");
        const double eps = resolve_eps(o);
        if (!(eps > 0.0)) throw ConfigError("sweep over e0prime requires eps > 0");
        for (double e0p : resolve_ladder(o, 1e-1, 1e-8, 8))
            t.rows.push_back(solve_row(FlowParams(theta, eps, e0p)));
    } else {
        throw ConfigError("--sweep-param must be eps or e0prime");
    }
    emit("sweep", o, t);
    return kExitOk;
}

int cmd_limit(const Options& o)
{
    const double theta = resolve_theta(o);
    const FlowParams params(theta, 0.0, o.e0prime);
    const LimitState lim = limit_state(params);
    const LimitMeasureSolution sol = limit_measure_solution(params);
    const double s = std::sin(theta), c = std::cos(theta), e0 = params.e0();

    Table t;
    t.columns = {"theta_deg", "e0prime", "u_lim", "v_lim", "p_lim", "eps_rho_lim",
                 "sigma_slope", "mass_weight_rate", "u_slope", "w0m_x1", "w0n_x1",
                 "w1m_x1", "w1n_x1", "w2m_x1", "w2n_x1", "w3m_x1", "w3n_x1",
                 "density_weight_x1", "wp1", "wp2"};
    t.rows = {{theta * 180.0 / kPi, o.e0prime, lim.u_lim, lim.v_lim, lim.p_lim,
               lim.eps_rho_lim, lim.sigma_slope, lim.mass_weight_rate, lim.u_slope,
               s, s * s / c, s * c * c, s * s * c, s * s * c, s * s * s, e0 * s,
               e0 * s * s / c, s / (c * c), sol.family.wp1, sol.family.wp2}};
    emit("limit", o, t);
    return kExitOk;
}

int cmd_verify_weak(const Options& o)
{
    const double theta = resolve_theta(o);
    const double tol = o.tol.value_or(1e-8);
    if (o.battery < 1) throw ConfigError("--battery must be at least 1");
    const FlowParams params(theta, o.eps.value_or(0.0), o.e0prime);

    MeasureFamily family = o.eps
        ? eps_measure_family(solve_downstream(params))
        : limit_measure_solution(params).family;

    const auto battery = stratified_battery(params, o.battery, o.seed);
    std::array<double, 4> worst{0, 0, 0, 0};
    for (const TestFunction& phi : battery) {
        const WeakResidual r = weak_residual(family, phi);
        for (int i = 0; i < 4; ++i) worst[i] = std::max(worst[i], std::fabs(r.r[i]));
    }
    const double overall = *std::max_element(worst.begin(), worst.end());
    const bool pass = overall < tol;

    Table t;
    t.columns = {"max_r0", "max_r1", "max_r2", "max_r3", "max_abs", "tol", "pass"};
    t.rows = {{worst[0], worst[1], worst[2], worst[3], overall, tol, pass ? 1.0 : 0.0}};
    json extra;
    extra["battery_size"] = battery.size();
    extra["family"] = o.eps ? "eps" : "limit";
    extra["pass"] = pass;
    emit("verify-weak", o, t, extra);
    return pass ? kExitOk : kExitNumerical;
}

int cmd_converge(const Options& o)
{
    const double theta = resolve_theta(o);
    const FlowParams params(theta, 0.0, o.e0prime);
    const auto ladder = resolve_ladder(o, 1e-2, 1e-5, 7);
    const auto phis = wedge_battery(params, 10, o.seed);
    const ConvergenceReport report = vague_convergence(params, phis, ladder);

    Table t;
    t.columns = {"component", "phi_index", "eps", "gap", "fitted_order"};
    json jcomp = json::array();
    for (int k = 0; k < kMeasureComponents; ++k) {
        json orders = json::array(), gap_rows = json::array();
        for (std::size_t pi = 0; pi < phis.size(); ++pi) {
            orders.push_back(report.fitted_order[pi][k]);
            gap_rows.push_back(report.gaps[pi][k]);
            for (std::size_t li = 0; li < ladder.size(); ++li)
                t.rows.push_back({(double)k, (double)pi, ladder[li],
                                  report.gaps[pi][k][li], report.fitted_order[pi][k]});
        }
        jcomp.push_back({{"name", kComponentNames[k]},
                         {"fitted_order", orders},
                         {"gaps", gap_rows}});
    }
    json extra;
    extra["components"] = jcomp;
    extra["eps_ladder"] = ladder;
    extra["min_fitted_order"] = report.min_fitted_order();
    emit("converge", o, t, extra);

    if (!o.svg_path.empty()) {
        std::vector<svg::Series> series(kMeasureComponents);
        for (int k = 0; k < kMeasureComponents; ++k) {
            series[k].label = kComponentNames[k];
            for (std::size_t li = 0; li < ladder.size(); ++li) {
                double worst = 0.0;
                for (std::size_t pi = 0; pi < phis.size(); ++pi)
                    worst = std::max(worst, report.gaps[pi][k][li]);
                series[k].points.emplace_back(ladder[li], worst);
            }
        }
        write_text(o.svg_path,
                   svg::render_plot("pairing gap vs eps", "eps", "max gap over battery",
                                    series, true, true));
    }
    return kExitOk;
}

int cmd_polar(const Options& o)
{
    const double theta = o.theta_deg || o.theta_rad ? resolve_theta(o) : kPi / 4.0;
    const double eps = resolve_eps(o);
    if (!(eps > 0.0)) throw ConfigError("polar requires eps > 0");
    const FlowParams params(theta, eps, o.e0prime);
    const auto pts = sample_polar(params, o.points);

    Table t;
    t.columns = {"u", "v"};
    for (const PolarPoint& p : pts) t.rows.push_back({p.u, p.v});
    emit("polar", o, t);

    if (!o.svg_path.empty()) {
        std::vector<svg::Series> series;
        svg::Series polar{"shock polar", {}};
        for (const PolarPoint& p : pts) polar.points.emplace_back(p.u, p.v);
        series.push_back(polar);
        if (o.overlay_circle) {
            svg::Series circle{"low-energy circle", {}};
            const double h = (eps + 1.0) / (eps + 2.0), r = 1.0 / (eps + 2.0);
            for (int i = 0; i <= 128; ++i) {
                const double t_ang = kPi * i / 128.0;
                circle.points.emplace_back(h + r * std::cos(t_ang), r * std::sin(t_ang));
            }
            series.push_back(circle);
        }
        write_text(o.svg_path, svg::render_plot("shock polar", "u", "v", series));
    }
    return kExitOk;
}

json error_record(const std::string& type, const std::string& message)
{
    json doc;
    doc["version"] = kVersion;
    doc["error"] = {{"type", type}, {"message", message}};
    return doc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"supersonic wedge flow: shock polar solutions, hypersonic limit "
                 "measures, weak-form verification"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--e0prime", o.e0prime, "E0 - 1/2 (default 1.0)");
        cmd->add_option("--seed", o.seed, "battery seed (default 12345)");
        cmd->add_option("--tol", o.tol, "tolerance override");
        add_output_flags(cmd, o);
    };

    auto* solve = app.add_subcommand("solve", "single attached-shock solve");
    add_theta_flags(solve, o);
    add_second_param_flags(solve, o);
    add_common(solve);

    auto* sweep = app.add_subcommand("sweep", "solve over a geometric ladder");
    add_theta_flags(sweep, o);
    add_second_param_flags(sweep, o);
    sweep->add_option("--ladder", o.ladder_spec, "start,end,points (geometric)");
    sweep->add_option("--sweep-param", o.sweep_param, "eps|e0prime (default eps)");
    add_common(sweep);

    auto* limit = app.add_subcommand("limit", "closed-form hypersonic limit state");
    add_theta_flags(limit, o);
    add_common(limit);

    auto* verify = app.add_subcommand("verify-weak", "weak-form residuals over a "
                                      "stratified test-function battery");
    add_theta_flags(verify, o);
    verify->add_option("--eps", o.eps, "verify the eps family instead of the limit");
    verify->add_option("--battery", o.battery, "battery size (default 50)");
    add_common(verify);

    auto* converge = app.add_subcommand("converge", "vague-convergence study over "
                                        "an eps ladder");
    add_theta_flags(converge, o);
    converge->add_option("--ladder", o.ladder_spec, "start,end,points (geometric)");
    converge->add_option("--svg", o.svg_path, "write a log-log gap plot");
    add_common(converge);

    auto* polar = app.add_subcommand("polar", "sample the shock polar curve");
    add_theta_flags(polar, o);
    add_second_param_flags(polar, o);
    polar->add_option("--points", o.points, "sample count (default 257)");
    polar->add_option("--svg", o.svg_path, "write a (u,v) plot");
    polar->add_flag("--overlay-circle", o.overlay_circle,
                    "overlay the low-energy limiting circle");
    add_common(polar);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (solve->parsed()) return cmd_solve(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (limit->parsed()) return cmd_limit(o);
        if (verify->parsed()) return cmd_verify_weak(o);
        if (converge->parsed()) return cmd_converge(o);
        if (polar->parsed()) return cmd_polar(o);
        std::cerr << "no subcommand\n";
        return kExitConfig;
    } catch (const ShockDetached& e) {
        std::cout << error_record("shock_detached", e.what()).dump(2) << "\n";
        return kExitDetached;
    } catch (const RootBracketFailure& e) {
        std::cout << error_record("root_bracket_failure", e.what()).dump(2) << "\n";
        return kExitNumerical;
    } catch (const ConfigError& e) {
        std::cerr << error_record("invalid_config", e.what()).dump(2) << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << error_record("invalid_config", e.what()).dump(2) << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << error_record("invalid_config", e.what()).dump(2) << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << error_record("numerical_failure", e.what()).dump(2) << "\n";
        return kExitNumerical;
    }
}
