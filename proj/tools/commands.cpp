// SPDX-License-Identifier: MIT
#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vve/calibration.hpp"
#include "vve/csv_io.hpp"
#include "vve/error.hpp"
#include "vve/model.hpp"
#include "vve/pricing.hpp"
#include "vve/sde.hpp"

namespace vve::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

Json num(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round_to_printed(value);
}

Json num(const std::optional<double>& value) { return value ? num(*value) : Json(nullptr); }

Json num_array(const std::vector<double>& values) {
    Json out = Json::array();
    for (double v : values) out.push_back(num(v));
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << text;
}

void write_json(const fs::path& path, const Json& json) { write_text(path, json.dump(2) + "\n"); }

fs::path prepare_dir(const std::string& dir) {
    fs::path path(dir.empty() ? "." : dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create output directory '" + path.string() + "'");
    return path;
}

Json params_json(const ModelParams& p) {
    return Json{{"mu", num(p.mu)}, {"sigma", num(p.sigma)}, {"c1", num(p.c1)}, {"s0", num(p.s0)}};
}

Json report_json(const RegressionReport& r) {
    // Exactly the seven headline regression statistics.
    return Json{{"slope", num(r.slope)},
                {"p_slope", num(r.p_slope)},
                {"intercept", num(r.intercept)},
                {"p_intercept", num(r.p_intercept)},
                {"r_squared", num(r.r_squared)},
                {"pearson_corr", num(r.pearson_corr)},
                {"n_points", r.n_points}};
}

Json quote_json(const OptionQuote& q) {
    const auto& d = q.diagnostics;
    return Json{{"price", num(q.price)},
                {"method", std::string(to_string(q.method))},
                {"error_estimate", num(q.error_estimate)},
                {"diagnostics",
                 {{"d", num(d.d)},
                  {"fT_inv_K", num(d.fT_inv_K)},
                  {"ft_inv_x", num(d.ft_inv_x)},
                  {"upper_limit", num(d.upper_limit)},
                  {"nodes_or_paths", d.nodes_or_paths},
                  {"exploded_fraction", num(d.exploded_fraction)},
                  {"converged", d.converged},
                  {"truncated_at_explosion", d.truncated_at_explosion}}}};
}

Json error_json(const Error& e) {
    return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

// ---------------------------------------------------------------------------
// Option sets
// ---------------------------------------------------------------------------

struct ModelOptions {
    double mu = 0.05;
    double sigma = 0.2;
    double c1 = 0.0005;
    double s0 = 100.0;
};

void add_model_options(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--mu", m.mu, "Expected rate of return per year")->capture_default_str();
    cmd->add_option("--sigma", m.sigma, "Base volatility")->capture_default_str();
    cmd->add_option("--c1", m.c1, "Elasticity coefficient")->capture_default_str();
    cmd->add_option("--s0", m.s0, "Initial price")->capture_default_str();
}

struct SimulateOptions {
    ModelOptions model;
    double horizon = 1.0;
    std::size_t steps = 252;
    std::size_t paths = 1000;
    std::uint64_t seed = 7;
    std::string scheme = "euler";
    std::string name = "simulate";
    bool series = false;
    std::string start_date = "2020-01-02";
};

struct CalibrateOptions {
    std::string input;
    std::size_t window = kDefaultHvWindow;
    double trading_days = kDefaultTradingDays;
    std::string name = "calibrate";
};

struct HvOptions {
    std::string input;
    std::size_t window = kDefaultHvWindow;
    double trading_days = kDefaultTradingDays;
    std::string name = "hv";
};

struct RegressOptions {
    std::string input;
    std::string x = "close";
    std::string y = "hv";
    std::string name = "regress";
};

struct PriceOptions {
    std::vector<std::string> methods{"formula"};
    double sigma = 0.2;
    double c1 = 1e-4;
    double s0 = 100.0;
    double rate = 0.05;
    double strike = 100.0;
    double maturity = 1.0;
    double valuation_time = 0.0;
    std::optional<double> spot;
    std::size_t paths = 100000;
    std::size_t steps = 500;
    std::uint64_t seed = 11;
    double tolerance = kFormulaTolerance;
    bool greeks = false;
    std::string name = "price";
};

struct ConvergenceOptions {
    ModelOptions model;
    double horizon = 1.0;
    std::size_t paths = 1000;
    std::uint64_t seed = 1;
    int min_level = 6;
    int max_level = 11;
    std::string reference = "closed_form";
    std::size_t refine_factor = 16;
    std::string name = "convergence";
};

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

void cmd_simulate(const SimulateOptions& o, const fs::path& dir, std::ostream& out) {
    const ModelParams params = validate_params(o.model.mu, o.model.sigma, o.model.c1, o.model.s0);
    const Scheme scheme = parse_scheme(o.scheme);
    const TimeGrid grid = make_grid(o.horizon, o.steps);
    const PathEnsemble ensemble = simulate(params, grid, o.paths, o.seed, scheme);

    std::string csv;
    csv.reserve(ensemble.values.size() * 14);
    csv += "path,exploded";
    for (std::size_t k = 0; k <= grid.steps; ++k) csv += ",s_" + std::to_string(k);
    csv += '\n';
    for (std::size_t p = 0; p < ensemble.n_paths; ++p) {
        csv += std::to_string(p);
        csv += ensemble.exploded[p] ? ",1" : ",0";
        for (double v : ensemble.path(p)) {
            csv += ',';
            csv += format_number(v);
        }
        csv += '\n';
    }
    write_text(dir / (o.name + "_paths.csv"), csv);

    const EnsembleSummary summary = summarize(ensemble);
    const std::size_t last = summary.times.size() - 1;
    const Json json{{"command", "simulate"},
                    {"params", params_json(params)},
                    {"grid", {{"horizon", num(grid.horizon)}, {"steps", grid.steps}, {"dt", num(grid.dt())}}},
                    {"scheme", std::string(to_string(scheme))},
                    {"seed", o.seed},
                    {"n_paths", ensemble.n_paths},
                    {"live_paths", summary.live_paths},
                    {"exploded_fraction", num(summary.exploded_fraction)},
                    {"terminal",
                     {{"mean", num(summary.mean[last])},
                      {"q05", num(summary.q05[last])},
                      {"q50", num(summary.q50[last])},
                      {"q95", num(summary.q95[last])}}},
                    {"times", num_array(summary.times)},
                    {"mean_path", num_array(summary.mean)},
                    {"q05", num_array(summary.q05)},
                    {"q50", num_array(summary.q50)},
                    {"q95", num_array(summary.q95)}};
    write_json(dir / (o.name + "_summary.json"), json);

    if (o.series) {
        std::vector<Date> dates{parse_date(o.start_date)};
        while (dates.size() < grid.steps + 1) dates.push_back(next_weekday(dates.back()));
        const auto row = ensemble.path(0);
        if (ensemble.exploded[0] || std::find(row.begin(), row.end(), 0.0) != row.end()) {
            throw Error(ErrorCode::NonPositiveClose, "path 0 exploded or hit zero; cannot export as a series");
        }
        write_series_csv(dir / (o.name + "_series.csv"),
                         make_series(std::move(dates), std::vector<double>(row.begin(), row.end())));
    }
    out << "simulate: wrote " << ensemble.n_paths << " x " << grid.steps + 1 << " values to "
        << (dir / (o.name + "_paths.csv")).string() << '\n';
}

void cmd_hv(const HvOptions& o, const fs::path& dir, std::ostream& out) {
    const MarketSeries series = ingest_csv(o.input);
    const VolSeries hv = rolling_hv(series, o.window, o.trading_days);
    std::string csv = "date,close,hv\n";
    for (std::size_t i = 0; i < hv.size(); ++i) {
        csv += to_string(hv.dates[i]) + ',' + format_number(hv.closes[i]) + ',' + format_number(hv.vols[i]) + '\n';
    }
    write_text(dir / (o.name + ".csv"), csv);
    out << "hv: " << hv.size() << " points\n";
}

void cmd_regress(const RegressOptions& o, const fs::path& dir, std::ostream& out) {
    const auto columns = read_numeric_columns(o.input);
    const auto x = columns.find(o.x);
    const auto y = columns.find(o.y);
    if (x == columns.end() || y == columns.end()) {
        throw Error(ErrorCode::ParseError, "numeric columns '" + o.x + "' and '" + o.y + "' must exist in " + o.input);
    }
    const RegressionReport report = ols_fit(x->second, y->second);
    const Json json{{"command", "regress"},
                    {"x", o.x},
                    {"y", o.y},
                    {"report", report_json(report)},
                    {"exact_fit", report.exact_fit},
                    {"slope_stderr", num(report.slope_stderr)},
                    {"intercept_stderr", num(report.intercept_stderr)}};
    write_json(dir / (o.name + ".json"), json);
    out << json.dump(2) << '\n';
}

int cmd_calibrate(const CalibrateOptions& o, const fs::path& dir, std::ostream& out, std::ostream& err) {
    const MarketSeries series = ingest_csv(o.input);
    if (series.size() < o.window + 3) {
        throw Error(ErrorCode::SeriesTooShort, "calibration needs at least window + 3 closes");
    }
    const VolSeries hv = rolling_hv(series, o.window, o.trading_days);

    std::string csv = "date,close,hv\n";
    for (std::size_t i = 0; i < hv.size(); ++i) {
        csv += to_string(hv.dates[i]) + ',' + format_number(hv.closes[i]) + ',' + format_number(hv.vols[i]) + '\n';
    }
    write_text(dir / (o.name + "_overlay.csv"), csv);

    Json json{{"command", "calibrate"},
              {"input", fs::path(o.input).filename().string()},
              {"window", o.window},
              {"trading_days_per_year", num(o.trading_days)},
              {"n_closes", series.size()}};
    int status = 0;
    try {
        const RegressionReport report = ols_fit(hv.closes, hv.vols);
        json["report"] = report_json(report);
        json["exact_fit"] = report.exact_fit;
        const double drift = estimate_drift(series, o.trading_days);
        json["drift"] = num(drift);
        const CalibrationResult result = calibration_from_report(report, drift, series.closes.front());
        json["params"] = params_json(result.params);
        json["raw_intercept"] = num(result.raw_intercept);
        Json warnings = Json::array();
        for (const auto& w : result.warnings) {
            warnings.push_back({{"code", w.code}, {"message", w.message}});
            err << "warning[" << w.code << "]: " << w.message << '\n';
        }
        json["warnings"] = warnings;
    } catch (const Error& e) {
        json["error"] = error_json(e);
        err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
        status = 1;
    }
    write_json(dir / (o.name + ".json"), json);
    out << json.dump(2) << '\n';
    return status;
}

void cmd_price(const PriceOptions& o, const fs::path& dir, std::ostream& out) {
    const RiskNeutralParams rn{o.sigma, o.c1, o.s0, o.rate};
    OptionSpec opt{o.strike, o.maturity, o.valuation_time, o.spot};
    validate_option(opt);
    const double x = opt.spot_or(rn.s0);
    const double tau = opt.maturity - opt.valuation_time;

    std::vector<OptionQuote> quotes;
    for (const auto& name : o.methods) {
        const PricingMethod method = parse_method(name);
        OptionQuote q;
        if (tau == 0.0) {
            q.price = std::max(x - opt.strike, 0.0);
            q.method = method;
        } else if (method == PricingMethod::Formula) {
            q = price_formula(rn, opt, o.tolerance);
        } else if (method == PricingMethod::MonteCarlo) {
            q = price_mc(rn, opt, o.paths, o.steps, o.seed);
        } else {
            q = price_bs(x, opt.strike, tau, rn.rate, rn.sigma);
        }
        quotes.push_back(q);
    }

    Json json{{"command", "price"},
              {"inputs",
               {{"sigma", num(rn.sigma)},
                {"c1", num(rn.c1)},
                {"s0", num(rn.s0)},
                {"r", num(rn.rate)},
                {"strike", num(opt.strike)},
                {"maturity", num(opt.maturity)},
                {"valuation_time", num(opt.valuation_time)},
                {"spot", num(x)},
                {"paths", o.paths},
                {"steps", o.steps},
                {"seed", o.seed},
                {"tolerance", num(o.tolerance)}}}};
    Json quote_map = Json::object();
    for (const auto& q : quotes) quote_map[std::string(to_string(q.method))] = quote_json(q);
    json["quotes"] = quote_map;

    Json comparisons = Json::array();
    for (std::size_t i = 0; i < quotes.size(); ++i) {
        for (std::size_t j = i + 1; j < quotes.size(); ++j) {
            const double diff = quotes[i].price - quotes[j].price;
            const double se = std::hypot(quotes[i].method == PricingMethod::MonteCarlo ? quotes[i].error_estimate : 0.0,
                                         quotes[j].method == PricingMethod::MonteCarlo ? quotes[j].error_estimate : 0.0);
            comparisons.push_back({{"a", std::string(to_string(quotes[i].method))},
                                   {"b", std::string(to_string(quotes[j].method))},
                                   {"difference", num(diff)},
                                   {"abs_diff_in_se", se > 0.0 ? num(std::abs(diff) / se) : Json(nullptr)}});
        }
    }
    json["comparisons"] = comparisons;

    if (tau > 0.0 && rn.sigma > 0.0 && opt.strike > 0.0 && std::abs(rn.gamma()) >= kGammaTol) {
        auto rows = compare_inverse_forms(rn, opt.maturity, {opt.strike});
        json["inverse_crosscheck"] = {{"t", num(opt.maturity)},
                                      {"x", num(rows[0].x)},
                                      {"numeric", num(rows[0].numeric)},
                                      {"printed", num(rows[0].printed)},
                                      {"difference", num(rows[0].difference)}};
    }

    if (o.greeks && tau > 0.0) {
        Json greeks = Json::object();
        for (const auto& q : quotes) {
            Pricer pricer;
            if (q.method == PricingMethod::Formula) {
                pricer = [&](const RiskNeutralParams& p, const OptionSpec& s) { return price_formula(p, s, o.tolerance); };
            } else if (q.method == PricingMethod::MonteCarlo) {
                pricer = [&](const RiskNeutralParams& p, const OptionSpec& s) { return price_mc(p, s, o.paths, o.steps, o.seed); };
            } else {
                pricer = [](const RiskNeutralParams& p, const OptionSpec& s) {
                    return price_bs(s.spot_or(p.s0), s.strike, s.maturity - s.valuation_time, p.rate, p.sigma);
                };
            }
            const Greeks g = greeks_bump(pricer, rn, opt);
            greeks[std::string(to_string(q.method))] = {{"delta", num(g.delta)},
                                                        {"gamma", num(g.gamma)},
                                                        {"vega", num(g.vega)},
                                                        {"spot_bump", num(g.spot_bump)},
                                                        {"sigma_bump", num(g.sigma_bump)}};
        }
        json["greeks"] = greeks;
    }

    write_json(dir / (o.name + ".json"), json);
    out << json.dump(2) << '\n';
}

void cmd_convergence(const ConvergenceOptions& o, const fs::path& dir, std::ostream& out) {
    const ModelParams params = validate_params(o.model.mu, o.model.sigma, o.model.c1, o.model.s0);
    if (o.min_level < 0 || o.max_level <= o.min_level || o.max_level > 24) {
        throw Error(ErrorCode::InvalidArgument, "need 0 <= min-level < max-level <= 24");
    }
    ConvergenceReference reference;
    if (o.reference == "closed_form") {
        reference = ConvergenceReference::ClosedForm;
    } else if (o.reference == "refined_euler") {
        reference = ConvergenceReference::RefinedEuler;
    } else {
        throw Error(ErrorCode::InvalidArgument, "reference must be closed_form or refined_euler");
    }
    std::vector<double> levels;
    for (int k = o.min_level; k <= o.max_level; ++k) levels.push_back(o.horizon * std::ldexp(1.0, -k));

    Json reports = Json::array();
    std::string csv = "scheme,dt,strong_error\n";
    for (Scheme scheme : {Scheme::Euler, Scheme::Milstein}) {
        const ConvergenceReport r =
            strong_convergence(params, o.horizon, levels, o.paths, o.seed, scheme, reference, o.refine_factor);
        reports.push_back({{"scheme", std::string(to_string(scheme))},
                           {"dt_levels", num_array(r.dt_levels)},
                           {"strong_errors", num_array(r.strong_errors)},
                           {"fitted_slope", num(r.fitted_slope)},
                           {"excluded_paths", r.excluded_paths}});
        for (std::size_t i = 0; i < r.dt_levels.size(); ++i) {
            csv += std::string(to_string(scheme)) + ',' + format_number(r.dt_levels[i]) + ',' +
                   format_number(r.strong_errors[i]) + '\n';
        }
    }
    const Json json{{"command", "convergence"},
                    {"params", params_json(params)},
                    {"horizon", num(o.horizon)},
                    {"n_paths", o.paths},
                    {"seed", o.seed},
                    {"reference", std::string(to_string(reference))},
                    {"refine_factor", o.refine_factor},
                    {"reports", reports}};
    write_json(dir / (o.name + ".json"), json);
    write_text(dir / (o.name + ".csv"), csv);
    out << json.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable volatility elasticity model toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/INI file (CLI flags take precedence)");
    bool show_config = false;
    app.add_flag("--show-config", show_config, "Print the effective configuration and exit");
    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "Directory for output files")
        ->envname("VVE_OUTPUT_DIR")
        ->capture_default_str();

    SimulateOptions sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate price paths");
    add_model_options(simulate_cmd, sim.model);
    simulate_cmd->add_option("--horizon", sim.horizon, "Horizon in years")->capture_default_str();
    simulate_cmd->add_option("--steps", sim.steps, "Time steps")->capture_default_str();
    simulate_cmd->add_option("--paths", sim.paths, "Number of paths")->capture_default_str();
    simulate_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    simulate_cmd->add_option("--scheme", sim.scheme, "euler | milstein | exact")->capture_default_str();
    simulate_cmd->add_option("--name", sim.name, "Output file prefix")->capture_default_str();
    simulate_cmd->add_flag("--series", sim.series, "Also write path 0 as a date,close series");
    simulate_cmd->add_option("--start-date", sim.start_date, "First date of the exported series")
        ->capture_default_str();

    CalibrateOptions cal;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "Fit sigma and c1 from a close-price CSV");
    calibrate_cmd->add_option("--input", cal.input, "date,close CSV")->required();
    calibrate_cmd->add_option("--window", cal.window, "HV window in returns")->capture_default_str();
    calibrate_cmd->add_option("--trading-days", cal.trading_days, "Annualization days")->capture_default_str();
    calibrate_cmd->add_option("--name", cal.name, "Output file prefix")->capture_default_str();

    HvOptions hvo;
    auto* hv_cmd = app.add_subcommand("hv", "Rolling historical volatility of a close-price CSV");
    hv_cmd->add_option("--input", hvo.input, "date,close CSV")->required();
    hv_cmd->add_option("--window", hvo.window, "HV window in returns")->capture_default_str();
    hv_cmd->add_option("--trading-days", hvo.trading_days, "Annualization days")->capture_default_str();
    hv_cmd->add_option("--name", hvo.name, "Output file prefix")->capture_default_str();

    RegressOptions reg;
    auto* regress_cmd = app.add_subcommand("regress", "OLS of one CSV column on another");
    regress_cmd->add_option("--input", reg.input, "CSV with a header row")->required();
    regress_cmd->add_option("--x", reg.x, "Regressor column")->capture_default_str();
    regress_cmd->add_option("--y", reg.y, "Response column")->capture_default_str();
    regress_cmd->add_option("--name", reg.name, "Output file prefix")->capture_default_str();

    PriceOptions pr;
    auto* price_cmd = app.add_subcommand("price", "Price a European call");
    price_cmd->add_option("--method", pr.methods, "Comma list of formula, mc, bs")
        ->delimiter(',')
        ->capture_default_str();
    price_cmd->add_option("--sigma", pr.sigma, "Base volatility")->capture_default_str();
    price_cmd->add_option("--c1", pr.c1, "Elasticity coefficient")->capture_default_str();
    price_cmd->add_option("--s0", pr.s0, "Initial price")->capture_default_str();
    price_cmd->add_option("--r", pr.rate, "Risk-free rate")->capture_default_str();
    price_cmd->add_option("--strike", pr.strike, "Strike")->capture_default_str();
    price_cmd->add_option("--maturity", pr.maturity, "Maturity T in years")->capture_default_str();
    price_cmd->add_option("--valuation-time", pr.valuation_time, "Valuation time t")->capture_default_str();
    price_cmd->add_option("--spot", pr.spot, "Spot at valuation time (default s0)");
    price_cmd->add_option("--paths", pr.paths, "Monte Carlo paths")->capture_default_str();
    price_cmd->add_option("--steps", pr.steps, "Monte Carlo time steps")->capture_default_str();
    price_cmd->add_option("--seed", pr.seed, "Monte Carlo seed")->capture_default_str();
    price_cmd->add_option("--tolerance", pr.tolerance, "Quadrature absolute tolerance")->capture_default_str();
    price_cmd->add_flag("--greeks", pr.greeks, "Bump-and-revalue delta, gamma, vega");
    price_cmd->add_option("--name", pr.name, "Output file prefix")->capture_default_str();

    ConvergenceOptions conv;
    auto* convergence_cmd = app.add_subcommand("convergence", "Strong convergence of Euler and Milstein");
    add_model_options(convergence_cmd, conv.model);
    convergence_cmd->add_option("--horizon", conv.horizon, "Horizon in years")->capture_default_str();
    convergence_cmd->add_option("--paths", conv.paths, "Number of paths")->capture_default_str();
    convergence_cmd->add_option("--seed", conv.seed, "Random seed")->capture_default_str();
    convergence_cmd->add_option("--min-level", conv.min_level, "Coarsest dt = horizon * 2^-min")->capture_default_str();
    convergence_cmd->add_option("--max-level", conv.max_level, "Finest dt = horizon * 2^-max")->capture_default_str();
    convergence_cmd->add_option("--reference", conv.reference, "closed_form | refined_euler")->capture_default_str();
    convergence_cmd->add_option("--refine-factor", conv.refine_factor, "Refined-Euler grid factor")
        ->capture_default_str();
    convergence_cmd->add_option("--name", conv.name, "Output file prefix")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0 through this path too.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    if (show_config) {
        out << app.config_to_str(true, false);
        return 0;
    }

    try {
        const fs::path dir = prepare_dir(out_dir);
        if (simulate_cmd->parsed()) cmd_simulate(sim, dir, out);
        if (calibrate_cmd->parsed()) return cmd_calibrate(cal, dir, out, err);
        if (hv_cmd->parsed()) cmd_hv(hvo, dir, out);
        if (regress_cmd->parsed()) cmd_regress(reg, dir, out);
        if (price_cmd->parsed()) cmd_price(pr, dir, out);
        if (convergence_cmd->parsed()) cmd_convergence(conv, dir, out);
    } catch (const Error& e) {
        err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("vve_cli");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vve::cli
