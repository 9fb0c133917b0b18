// gburgers: CLI front end for the solver library.
//
// Subcommands: evaluate, compare, sweep, oracle, report.  Exit codes:
// 0 success, 1 runtime failure (I/O, invalid spec contents, solver errors),
// 2 usage errors (bad flags, malformed grid strings, missing required options).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gburgers/acceptance.hpp"
#include "gburgers/asymptotic.hpp"
#include "gburgers/closedform.hpp"
#include "gburgers/fd.hpp"
#include "gburgers/inviscid.hpp"
#include "gburgers/io.hpp"
#include "gburgers/model.hpp"
#include "gburgers/spec_io.hpp"
#include "gburgers/viscous.hpp"

namespace gb = gburgers;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> grid_or_usage(const std::string& text) {
    try {
        return gb::parse_grid(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

gb::MinimizerSide parse_side(const std::string& s) {
    if (s == "left") return gb::MinimizerSide::left;
    if (s == "right") return gb::MinimizerSide::right;
    if (s == "auto") return gb::MinimizerSide::auto_pick;
    throw UsageError("--side must be one of: left, right, auto");
}

// The closed-form evaluators only apply to specs of the matching shape; after
// construction all profiles share the merged breakpoint list, so shape checks
// go through profiles[0].
gb::BoxData box_from_spec(const gb::ProblemSpec& spec) {
    const auto& bp = spec.profiles.front().breakpoints;
    if (bp.size() != 2)
        throw std::runtime_error("box evaluator: spec must have exactly the breakpoints {-l, l}");
    const double l = bp[1];
    if (!(l > 0.0) || std::abs(bp[0] + bp[1]) > 1e-12 * l)
        throw std::runtime_error("box evaluator: breakpoints must be symmetric about 0");
    std::vector<double> u0;
    for (const auto& p : spec.profiles) {
        if (p.left_tail != 0.0 || p.right_tail != 0.0)
            throw std::runtime_error("box evaluator: tails must vanish");
        if (p.slopes.size() != 1 || p.slopes[0] != 0.0)
            throw std::runtime_error("box evaluator: the plateau must be flat");
        u0.push_back(p.values[0]);
    }
    return gb::BoxData(l, std::move(u0), spec.c);
}

gb::RiemannData riemann_from_spec(const gb::ProblemSpec& spec) {
    const auto& bp = spec.profiles.front().breakpoints;
    if (bp.size() != 1 || std::abs(bp[0]) > 1e-12)
        throw std::runtime_error("riemann evaluator: spec must have a single jump at x = 0");
    std::vector<double> uL, uR;
    for (const auto& p : spec.profiles) {
        uL.push_back(p.left_tail);
        uR.push_back(p.right_tail);
    }
    return gb::RiemannData(std::move(uL), std::move(uR), spec.c);
}

gb::FieldSlice closed_form_grid(const std::vector<double>& xs, double t, std::size_t ncomp,
                                const std::function<std::vector<double>(double)>& point) {
    gb::FieldSlice slice;
    slice.t = t;
    slice.x = xs;
    slice.u.assign(ncomp, std::vector<double>(xs.size(), 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::vector<double> v = point(xs[i]);
        for (std::size_t j = 0; j < ncomp; ++j) slice.u[j][i] = v[j];
    }
    return slice;
}

struct EvalRequest {
    std::string evaluator;
    std::optional<double> nu;
    gb::MinimizerSide side = gb::MinimizerSide::auto_pick;
    double cfl = 0.45;
};

// One slice of the chosen solution family on the grid at time t.
gb::FieldSlice run_evaluator(const gb::ProblemSpec& spec, const gb::PotentialFunction& P,
                             const EvalRequest& req, const std::vector<double>& xs, double t) {
    const std::size_t N = spec.components();
    if (req.evaluator == "viscous") {
        if (!req.nu) throw UsageError("evaluator 'viscous' requires --nu");
        gb::ViscousConfig cfg;
        cfg.nu = *req.nu;
        return gb::evaluate_viscous_grid(spec, cfg, xs, t);
    }
    if (req.evaluator == "inviscid") {
        return gb::evaluate_inviscid_grid(spec, P, xs, t, req.side);
    }
    if (req.evaluator == "box") {
        const gb::BoxData bd = box_from_spec(spec);
        if (req.nu) {
            const double nu = *req.nu;
            return closed_form_grid(xs, t, N, [&](double x) {
                return gb::viscous_box_solution(bd, nu, x, t);
            });
        }
        return closed_form_grid(xs, t, N,
                                [&](double x) { return gb::inviscid_box_solution(bd, x, t); });
    }
    if (req.evaluator == "riemann") {
        const gb::RiemannData rd = riemann_from_spec(spec);
        return closed_form_grid(xs, t, N,
                                [&](double x) { return gb::riemann_solution(rd, x, t); });
    }
    if (req.evaluator == "profile") {
        if (!req.nu) throw UsageError("evaluator 'profile' requires --nu");
        const gb::AsymptoticInputs ai = gb::AsymptoticInputs::from_spec(spec, P, *req.nu);
        return gb::asymptotic_profile_grid(ai, xs, t);
    }
    if (req.evaluator == "fd") {
        if (!req.nu) throw UsageError("evaluator 'fd' requires --nu");
        gb::FDConfig cfg;
        cfg.x_min = xs.front();
        cfg.x_max = xs.back();
        cfg.nx = static_cast<int>(xs.size());
        cfg.t_final = t;
        cfg.cfl_safety = req.cfl;
        return gb::solve_fd(spec, *req.nu, cfg);
    }
    throw UsageError("unknown evaluator '" + req.evaluator +
                     "' (expected viscous, inviscid, box, riemann, profile, or fd)");
}

json tolerance_block(const EvalRequest& req) {
    json tol;
    if (req.evaluator == "viscous" || req.evaluator == "profile") {
        gb::ViscousConfig def;
        tol["rel_tol"] = def.rel_tol;
        tol["truncation_sigmas"] = def.truncation_sigmas;
    }
    if (req.evaluator == "inviscid") {
        tol["tie_tol"] = 1e-10;
        tol["side"] = req.side == gb::MinimizerSide::left
                          ? "left"
                          : (req.side == gb::MinimizerSide::right ? "right" : "auto");
    }
    if (req.evaluator == "fd") tol["cfl_safety"] = req.cfl;
    return tol;
}

void emit_slice(const gb::FieldSlice& slice, const std::string& out_path, bool mask,
                gb::RunManifest manifest) {
    if (out_path.empty()) {
        std::cout << gb::slice_to_csv(slice, mask);
        return;
    }
    gb::write_slice_csv(out_path, slice, mask);
    manifest.outputs.push_back(out_path);
    gb::write_sidecar(out_path, manifest);
}

int cmd_evaluate(const std::string& spec_path, const std::string& grid_text, double t,
                 const EvalRequest& req, const std::string& out_path) {
    const gb::ProblemSpec spec = gb::load_spec(spec_path);
    const gb::PotentialFunction P = gb::build_potential(spec);
    const std::vector<double> xs = grid_or_usage(grid_text);
    const gb::FieldSlice slice = run_evaluator(spec, P, req, xs, t);

    gb::RunManifest manifest;
    manifest.command = "evaluate";
    manifest.spec_path = spec_path;
    manifest.evaluator = req.evaluator;
    manifest.grid = grid_text;
    if (req.nu) {
        manifest.nu = *req.nu;
        manifest.has_nu = true;
    }
    manifest.t_list = {t};
    manifest.extra = tolerance_block(req);
    emit_slice(slice, out_path, req.evaluator == "inviscid", std::move(manifest));
    return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
    const gb::FieldSlice a = gb::read_slice_csv(a_path);
    const gb::FieldSlice b = gb::read_slice_csv(b_path);
    if (a.components() != b.components())
        throw std::runtime_error("compare: component counts differ (" +
                                 std::to_string(a.components()) + " vs " +
                                 std::to_string(b.components()) + ")");
    if (a.x != b.x) throw std::runtime_error("compare: x grids differ");
    if (a.points() == 0) throw std::runtime_error("compare: empty slices");

    // trapezoidal weights so the L1 gap approximates an integral on any grid
    std::vector<double> w(a.points(), 0.0);
    if (a.points() == 1) {
        w[0] = 1.0;
    } else {
        for (std::size_t i = 0; i < a.points(); ++i) {
            const double lo = i == 0 ? a.x[0] : a.x[i - 1];
            const double hi = i + 1 == a.points() ? a.x[i] : a.x[i + 1];
            w[i] = 0.5 * (hi - lo);
        }
    }

    json comps = json::array();
    double max_linf = 0.0;
    for (std::size_t j = 0; j < a.components(); ++j) {
        double linf = 0.0, l1 = 0.0, x_at = a.x[0];
        for (std::size_t i = 0; i < a.points(); ++i) {
            const double d = std::abs(a.u[j][i] - b.u[j][i]);
            if (d > linf) {
                linf = d;
                x_at = a.x[i];
            }
            l1 += w[i] * d;
        }
        comps.push_back({{"component", j + 1}, {"linf", linf}, {"l1", l1}, {"x_at_max", x_at}});
        max_linf = std::max(max_linf, linf);
    }
    json report = {{"tool", "gburgers"},
                   {"version", gb::kToolVersion},
                   {"a", a_path},
                   {"b", b_path},
                   {"rows", a.points()},
                   {"components", comps},
                   {"max_linf", max_linf}};
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        gb::atomic_write_file(out_path, text);
    return 0;
}

std::vector<double> parse_time_list(const std::string& ts_text, const std::string& geom_text) {
    std::vector<double> ts;
    if (!ts_text.empty() && !geom_text.empty())
        throw UsageError("give either --ts or --t-geom, not both");
    if (!ts_text.empty()) {
        std::stringstream ss(ts_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0')
                throw UsageError("--ts entries must be numbers, got '" + tok + "'");
            ts.push_back(v);
        }
    } else if (!geom_text.empty()) {
        double lo = 0, hi = 0;
        int n = 0;
        char extra = 0;
        if (std::sscanf(geom_text.c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &extra) != 3)
            throw UsageError("--t-geom must be min:max:count");
        if (!(lo > 0.0) || !(hi > lo) || n < 2)
            throw UsageError("--t-geom needs 0 < min < max and count >= 2");
        for (int k = 0; k < n; ++k)
            ts.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1)));
    } else {
        throw UsageError("sweep needs --ts or --t-geom");
    }
    for (double t : ts)
        if (!(t > 0.0)) throw UsageError("sweep times must be positive");
    return ts;
}

int cmd_sweep(const std::string& spec_path, const std::string& grid_text,
              const std::string& ts_text, const std::string& geom_text, const EvalRequest& req,
              double threshold_opt, double spread_offset, const std::string& out_prefix) {
    const gb::ProblemSpec spec = gb::load_spec(spec_path);
    const gb::PotentialFunction P = gb::build_potential(spec);
    const std::vector<double> xs = grid_or_usage(grid_text);
    const std::vector<double> ts = parse_time_list(ts_text, geom_text);

    double threshold = threshold_opt;
    if (!(threshold > 0.0)) {
        double range = 0.0;
        for (const auto& p : spec.profiles) {
            auto [lo, hi] = p.range();
            range = std::max(range, hi - lo);
        }
        threshold = 1e-9 * (range > 0.0 ? range : 1.0);
    }

    std::ostringstream csv;
    csv << "t";
    for (std::size_t j = 0; j < spec.components(); ++j) csv << ",sup_u" << (j + 1);
    csv << ",s_minus,s_plus\n";

    std::vector<std::pair<double, double>> decay_series, spread_series;
    for (double t : ts) {
        const gb::FieldSlice slice = run_evaluator(spec, P, req, xs, t);
        const std::vector<double> sups = gb::sup_norm(slice);
        const gb::SupportEstimate est = gb::support_curves(slice, threshold);
        csv << gb::format_g17(t);
        double sup_all = 0.0;
        for (double s : sups) {
            csv << "," << gb::format_g17(s);
            sup_all = std::max(sup_all, s);
        }
        const double nan = std::numeric_limits<double>::quiet_NaN();
        csv << "," << gb::format_g17(est.s_minus.value_or(nan));
        csv << "," << gb::format_g17(est.s_plus.value_or(nan));
        csv << "\n";
        if (sup_all > 0.0) decay_series.emplace_back(t, sup_all);
        if (est.s_plus && *est.s_plus + spread_offset > 0.0)
            spread_series.emplace_back(t, *est.s_plus + spread_offset);
    }

    auto fit_json = [](const std::vector<std::pair<double, double>>& series) -> json {
        if (series.size() < 3) return nullptr;
        const gb::DecayFit fit = gb::decay_rate_fit(series);
        return {{"exponent", fit.exponent},
                {"log_intercept", fit.log_intercept},
                {"r_squared", fit.r_squared},
                {"t_window", {fit.window.first, fit.window.second}}};
    };
    json summary = {{"tool", "gburgers"},
                    {"version", gb::kToolVersion},
                    {"threshold", threshold},
                    {"times", ts},
                    {"decay_fit", fit_json(decay_series)}};
    if (spread_offset != 0.0) {
        summary["spread_offset"] = spread_offset;
        summary["spread_fit"] = fit_json(spread_series);
    }

    const std::string csv_path = out_prefix + ".csv";
    const std::string json_path = out_prefix + ".json";
    gb::atomic_write_file(csv_path, csv.str());
    gb::atomic_write_file(json_path, summary.dump(2) + "\n");

    gb::RunManifest manifest;
    manifest.command = "sweep";
    manifest.spec_path = spec_path;
    manifest.evaluator = req.evaluator;
    manifest.grid = grid_text;
    if (req.nu) {
        manifest.nu = *req.nu;
        manifest.has_nu = true;
    }
    manifest.t_list = ts;
    manifest.outputs = {csv_path, json_path};
    manifest.extra = tolerance_block(req);
    manifest.extra["threshold"] = threshold;
    gb::write_sidecar(csv_path, manifest);
    return 0;
}

int cmd_oracle(const std::string& spec_path, const std::string& grid_text, double t, double nu,
               double cfl, const std::string& out_path) {
    const gb::ProblemSpec spec = gb::load_spec(spec_path);
    const std::vector<double> xs = grid_or_usage(grid_text);
    gb::FDConfig cfg;
    cfg.x_min = xs.front();
    cfg.x_max = xs.back();
    cfg.nx = static_cast<int>(xs.size());
    cfg.t_final = t;
    cfg.cfl_safety = cfl;
    const gb::FieldSlice slice = gb::solve_fd(spec, nu, cfg);

    gb::RunManifest manifest;
    manifest.command = "oracle";
    manifest.spec_path = spec_path;
    manifest.evaluator = "fd";
    manifest.grid = grid_text;
    manifest.nu = nu;
    manifest.has_nu = true;
    manifest.t_list = {t};
    manifest.extra = {{"cfl_safety", cfl}};
    emit_slice(slice, out_path, false, std::move(manifest));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gburgers: explicit solution formulas for coupled Burgers systems"};
    app.require_subcommand(1);
    app.footer("Environment: GBURGERS_THREADS sets worker threads for grid evaluation "
               "(default 1; results are identical at any thread count).");

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "evaluate one solution slice on a grid");
    std::string ev_spec, ev_grid, ev_out, ev_side = "auto", ev_name = "viscous";
    double ev_t = 1.0, ev_cfl = 0.45;
    std::optional<double> ev_nu;
    ev->add_option("--spec", ev_spec, "problem spec JSON")->required();
    ev->add_option("--evaluator", ev_name, "viscous|inviscid|box|riemann|profile|fd");
    ev->add_option("--t", ev_t, "time")->required();
    ev->add_option("--x", ev_grid, "grid min:max:step")->required();
    ev->add_option("--nu", ev_nu, "viscosity (box: selects the viscous closed form)");
    ev->add_option("--side", ev_side, "minimizer side at nonuniqueness: left|right|auto");
    ev->add_option("--cfl", ev_cfl, "CFL safety factor (fd evaluator)");
    ev->add_option("--out", ev_out, "output CSV (stdout if omitted)");

    // compare
    auto* cp = app.add_subcommand("compare", "compare two slice CSVs on the same grid");
    std::string cp_a, cp_b, cp_out;
    cp->add_option("a", cp_a, "first CSV")->required();
    cp->add_option("b", cp_b, "second CSV")->required();
    cp->add_option("--out", cp_out, "JSON report path (stdout if omitted)");

    // sweep
    auto* sw = app.add_subcommand("sweep", "sup-norms and support across a time list");
    std::string sw_spec, sw_grid, sw_ts, sw_geom, sw_out, sw_side = "auto", sw_name = "inviscid";
    double sw_threshold = 0.0, sw_offset = 0.0, sw_cfl = 0.45;
    std::optional<double> sw_nu;
    sw->add_option("--spec", sw_spec, "problem spec JSON")->required();
    sw->add_option("--evaluator", sw_name, "viscous|inviscid|box|riemann|profile|fd");
    sw->add_option("--x", sw_grid, "grid min:max:step")->required();
    sw->add_option("--ts", sw_ts, "comma-separated times");
    sw->add_option("--t-geom", sw_geom, "geometric times min:max:count");
    sw->add_option("--nu", sw_nu, "viscosity (where the evaluator needs one)");
    sw->add_option("--threshold", sw_threshold,
                   "support threshold (default 1e-9 x data range)");
    sw->add_option("--spread-offset", sw_offset,
                   "also fit log(s_plus + offset) vs log t with this offset");
    sw->add_option("--side", sw_side, "minimizer side: left|right|auto");
    sw->add_option("--cfl", sw_cfl, "CFL safety factor (fd evaluator)");
    sw->add_option("--out", sw_out, "output prefix (writes PREFIX.csv and PREFIX.json)")
        ->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "independent finite-difference solve");
    std::string or_spec, or_grid, or_out;
    double or_t = 1.0, or_nu = 0.1, or_cfl = 0.45;
    orc->add_option("--spec", or_spec, "problem spec JSON")->required();
    orc->add_option("--t", or_t, "final time")->required();
    orc->add_option("--x", or_grid, "uniform grid min:max:step")->required();
    orc->add_option("--nu", or_nu, "viscosity")->required();
    orc->add_option("--cfl", or_cfl, "CFL safety factor");
    orc->add_option("--out", or_out, "output CSV (stdout if omitted)");

    // report
    auto* rp = app.add_subcommand("report", "run the built-in acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ev)) {
            EvalRequest req{ev_name, ev_nu, parse_side(ev_side), ev_cfl};
            return cmd_evaluate(ev_spec, ev_grid, ev_t, req, ev_out);
        }
        if (app.got_subcommand(cp)) return cmd_compare(cp_a, cp_b, cp_out);
        if (app.got_subcommand(sw)) {
            EvalRequest req{sw_name, sw_nu, parse_side(sw_side), sw_cfl};
            return cmd_sweep(sw_spec, sw_grid, sw_ts, sw_geom, req, sw_threshold, sw_offset,
                             sw_out);
        }
        if (app.got_subcommand(orc))
            return cmd_oracle(or_spec, or_grid, or_t, or_nu, or_cfl, or_out);
        if (app.got_subcommand(rp)) {
            const auto results = gb::acceptance::run_all(std::cout);
            return gb::acceptance::harness_ok(results) ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
