#include "renyi_cf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "renyi_cf/errors.hpp"
#include "renyi_cf/measures.hpp"
#include "renyi_cf/natural_extension.hpp"
#include "renyi_cf/transfer_op.hpp"

namespace renyi {

namespace {

struct ParsedX {
    Rational exact;
    bool is_exact;
};

ParsedX parse_x(const std::string& text) {
    if (is_fraction_literal(text)) return {parse_rational(text), true};
    std::size_t used = 0;
    const double d = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
    return {exact_rational(d), false};
}

double parse_unit(const std::string& text, const char* what) {
    const double v = to_double(parse_x(text).exact);
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
    return v;
}

Json opt_json(const std::optional<Digit>& v) { return v ? Json(*v) : Json(); }

Report cmd_expand(const RunConfig& c) {
    const CFParams params(c.N.front());
    const ParsedX x = parse_x(c.x);
    const Expansion e = expand(x.exact, c.n.front(), params);
    Report r;
    auto& digits = r.table("digits", {"k", "digit"});
    for (std::size_t k = 0; k < e.digits.size(); ++k) digits.rows.push_back({Json(k + 1), Json(e.digits[k])});

    const auto conv = convergents(e.digits);
    auto& ct = r.table("convergents", {"k", "p", "q", "value", "error", "bound", "holds"});
    bool all_hold = true;
    bool det_zero = true;
    for (std::size_t k = 0; k < conv.size(); ++k) {
        std::vector<Json> row{Json(k), Json(to_string(conv[k].p)), Json(to_string(conv[k].q)),
                              Json(to_double(Rational(conv[k].p, conv[k].q)))};
        if (k == 0) {
            row.insert(row.end(), {Json(), Json(), Json()});
        } else {
            const ApproximationCheck chk = approximation_bound(x.exact, conv[k - 1], conv[k], params);
            all_hold = all_hold && chk.holds();
            det_zero = det_zero && determinant_residual(conv[k - 1], conv[k], params) == 0;
            row.insert(row.end(), {Json(to_double(chk.error)), Json(to_double(chk.bound)), Json(chk.holds())});
        }
        ct.rows.push_back(std::move(row));
    }
    r.certificates["exact_input"] = x.is_exact;
    r.certificates["x_exact"] = to_string(x.exact);
    r.certificates["terminated_at"] = e.terminated_at ? Json(*e.terminated_at) : Json();
    r.certificates["approximation_bounds_hold"] = all_hold;
    r.certificates["determinant_residuals_zero"] = det_zero;
    return r;
}

DigitSequence config_digits(const RunConfig& c) {
    if (c.digits.empty()) throw std::invalid_argument("--digits is required for this command");
    return DigitSequence(CFParams(c.N.front()), c.digits);
}

Report cmd_convergents(const RunConfig& c) {
    const DigitSequence d = config_digits(c);
    const auto conv = convergents(d);
    Report r;
    auto& t = r.table("convergents", {"k", "p", "q", "determinant_residual"});
    bool zero = true;
    for (std::size_t k = 0; k < conv.size(); ++k) {
        Json res;
        if (k > 0) {
            const BigInt v = determinant_residual(conv[k - 1], conv[k], d.params());
            zero = zero && v == 0;
            res = to_string(v);
        }
        t.rows.push_back({Json(k), Json(to_string(conv[k].p)), Json(to_string(conv[k].q)), res});
    }
    r.certificates["determinant_residuals_zero"] = zero;
    return r;
}

Report cmd_cylinder(const RunConfig& c) {
    const DigitSequence d = config_digits(c);
    const CylinderInterval I = cylinder(d);
    const MeasureParams m(d.params());
    Report r;
    auto& ti = r.table("cylinder", {"low", "high", "low_value", "high_value", "length"});
    ti.rows.push_back({Json(to_string(I.low)), Json(to_string(I.high)), Json(to_double(I.low)),
                       Json(to_double(I.high)), Json(to_double(I.high - I.low))});
    auto& tw = r.table("weights", {"t", "product", "qpoly", "rho_t_mass"});
    double worst = 0.0;
    for (double t : c.t) {
        const ConditionalParam tp(t);
        const double a = cylinder_weight(d, t);
        const double b = cylinder_weight_qpoly(d, t);
        const double lo = rho_t_cdf(to_double(I.low), tp, m);
        const double hi = rho_t_cdf(to_double(I.high), tp, m);
        worst = std::max(worst, std::abs(a - b) / a);
        tw.rows.push_back({Json(t), Json(a), Json(b), Json(std::abs(hi - lo))});
    }
    r.certificates["max_relative_formula_gap"] = worst;
    return r;
}

Report cmd_measure(const RunConfig& c) {
    const double x = parse_unit(c.x, "--x");
    const double y = parse_unit(c.y, "--y");
    const Digit M = c.cutoff.value_or(10000);
    Report r;
    auto& t = r.table("measure", {"N", "x", "y", "t", "rho_density", "rho_cdf", "rho_bar_cdf", "rho_t_cdf",
                                  "invariance_residual", "invariance_certificate"});
    for (Digit N : c.N) {
        const MeasureParams m(N);
        const InvarianceCheck inv = invariance_residual(x, m, std::max(M, N));
        for (double tt : c.t) {
            t.rows.push_back({Json(N), Json(x), Json(y), Json(tt), Json(rho_density(x, m)), Json(rho_cdf(x, m)),
                              Json(rho_bar_cdf(x, y, m)), Json(rho_t_cdf(x, ConditionalParam(tt), m)),
                              Json(inv.residual), Json(inv.certificate)});
        }
    }
    r.certificates["cutoff"] = M;
    return r;
}

GridFunction read_grid_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open --input file '" + path + "'");
    std::vector<double> xs, vs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--input: expected 'breakpoint,value' rows");
        char* end = nullptr;
        const double b = std::strtod(line.c_str(), &end);
        if (end != line.c_str() + comma) continue;  // header row
        xs.push_back(b);
        vs.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    return GridFunction(std::move(xs), std::move(vs));
}

Report cmd_pfo(const RunConfig& c) {
    const MeasureParams m(c.N.front());
    const GridFunction f = c.input.empty() ? GridFunction({0.0, 1.0}, {0.0, 1.0}) : read_grid_function(c.input);
    PfoOptions opt;
    opt.truncation = c.cutoff.value_or(default_truncation(m.N()));
    opt.output_points = c.resolution.value_or(1025);
    opt.threads = c.threads;
    const std::size_t n = c.n.front();
    const auto rows = contraction_report(f, m, n, opt);

    Report r;
    auto& t = r.table("contraction", {"k", "variation", "deviation", "bound", "certificate", "within"});
    bool ok = true;
    for (const auto& row : rows) {
        const bool within = row.variation <= row.bound + row.certificate + 1e-12 &&
                            row.deviation <= row.bound + row.certificate + 1e-12;
        ok = ok && within;
        t.rows.push_back({Json(row.k), Json(row.variation), Json(row.deviation), Json(row.bound),
                          Json(row.certificate), Json(within)});
    }
    GridFunction g = f;
    for (std::size_t k = 0; k < n; ++k) g = pfo_apply(g, m, opt).g;
    auto& it = r.table("iterate", {"x", "value"});
    for (std::size_t k = 0; k < g.size(); ++k) it.rows.push_back({Json(g.breakpoints()[k]), Json(g.values()[k])});
    r.certificates["fixed_functional"] = pfo_fixed_functional(f, m);
    r.certificates["contraction_ratio"] = contraction_ratio(m);
    r.certificates["truncation"] = *opt.truncation;
    r.certificates["all_within_bounds"] = ok;
    return r;
}

Report cmd_orbit2d(const RunConfig& c) {
    const CFParams params(c.N.front());
    ExtendedPoint p{parse_unit(c.x, "--x"), parse_unit(c.y, "--y")};
    Report r;
    auto& t = r.table("orbit", {"step", "x", "y", "digit"});
    Json stopped;
    for (std::size_t k = 0; k <= c.n.front(); ++k) {
        if (!(p.x < 1.0)) {
            t.rows.push_back({Json(k), Json(p.x), Json(p.y), Json()});
            stopped = k;
            break;
        }
        t.rows.push_back({Json(k), Json(p.x), Json(p.y), Json(digit(p.x, params))});
        if (k < c.n.front()) p = extension_map(p, params);
    }
    r.certificates["stopped_at"] = stopped;
    return r;
}

Report cmd_gk(const RunConfig& c, std::ostream& warn, bool rate_only = false) {
    Report r;
    auto& t = r.table("errors", {"N", "t", "n", "method", "sup_error", "sup_upper", "marginal_sup", "lower_bound",
                                 "upper_bound", "tolerance", "tail", "argmax_x", "argmax_y", "resolution",
                                 "cutoff", "words", "atoms", "samples", "discarded", "upper_ok", "lower_ok"});
    std::vector<ErrorReport> reports;
    for (Digit N : c.N) {
        const MeasureParams m(N);
        for (double tt : c.t) {
            for (std::size_t n : c.n) {
                SupOptions opt;
                opt.method = c.method;
                opt.resolution = c.resolution.value_or(513);
                opt.exact.cutoff = c.cutoff.value_or(60);
                opt.exact.budget = c.budget;
                opt.exact.threads = c.threads;
                opt.mc.samples = c.samples;
                opt.mc.threads = c.threads;
                if (opt.method == Method::exact) {
                    const double words =
                        std::pow(static_cast<double>(opt.exact.cutoff - N + 1), static_cast<double>(n));
                    if (words > c.budget) {
                        if (!c.seed) {
                            throw ComplexityGuard("exact enumeration for N=" + std::to_string(N) + ", n=" +
                                                  std::to_string(n) + " exceeds the budget and the monte-carlo "
                                                  "fallback needs --seed");
                        }
                        warn << "warning: exact enumeration for N=" << N << ", n=" << n
                             << " exceeds the budget; switching to monte-carlo\n";
                        opt.method = Method::monte_carlo;
                    }
                }
                if (opt.method == Method::monte_carlo) {
                    if (!c.seed) throw std::invalid_argument("--seed is required for the monte-carlo method");
                    opt.mc.seed = *c.seed;
                }
                const ErrorReport e = sup_error(tt, n, m, opt);
                if (e.method == Method::monte_carlo && e.discarded * 10000 > e.samples + e.discarded) {
                    warn << "warning: " << e.discarded << " orbits discarded after digit overflow\n";
                }
                reports.push_back(e);
                const bool upper_ok = e.sup_error <= e.upper_bound + e.tolerance;
                const bool lower_ok = e.sup_error >= e.lower_bound - e.tolerance;
                t.rows.push_back({Json(e.N), Json(e.t), Json(e.n), Json(to_string(e.method)), Json(e.sup_error),
                                  Json(e.sup_upper), Json(e.marginal_sup), Json(e.lower_bound),
                                  Json(e.upper_bound), Json(e.tolerance), Json(e.tail), Json(e.argmax_x),
                                  Json(e.argmax_y), Json(e.resolution), Json(e.cutoff), Json(e.words),
                                  Json(e.atoms), Json(e.samples), Json(e.discarded), Json(upper_ok),
                                  Json(lower_ok)});
            }
        }
    }
    if (rate_only) {
        const RateEstimate est = rate_estimate(reports);
        auto& f = r.table("fit", {"ratio", "delta", "lower", "upper", "within", "lower_root", "slope", "intercept"});
        f.rows.push_back({Json(est.ratio), Json(est.delta), Json(est.lower), Json(est.upper), Json(est.within()),
                          Json(est.lower_root), Json(est.slope), Json(est.intercept)});
    }
    return r;
}

Report cmd_table(const RunConfig& c) {
    Report r;
    auto& t = r.table("bounds", {"N", "lower", "upper"});
    for (const auto& row : bounds_table(c.N)) t.rows.push_back({Json(row.N), Json(row.lower), Json(row.upper)});
    return r;
}

void write_artifact(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write --output file '" + c.output + "'");
    f << text;
}

std::string error_object(std::string_view type, const std::string& message) {
    Json e = Json::object();
    e["error"] = {{"type", std::string(type)}, {"message", message}};
    e["schema"] = report_schema_version();
    return e.dump(2) + "\n";
}

}  // namespace

Json config_to_json(const RunConfig& c) {
    Json j = Json::object();
    j["command"] = c.command;
    j["N"] = c.N;
    j["t"] = c.t;
    j["n"] = c.n;
    j["x"] = c.x;
    j["y"] = c.y;
    j["digits"] = c.digits;
    j["method"] = to_string(c.method);
    j["resolution"] = c.resolution ? Json(*c.resolution) : Json();
    j["cutoff"] = opt_json(c.cutoff);
    j["samples"] = c.samples;
    j["seed"] = c.seed ? Json(*c.seed) : Json();
    j["budget"] = c.budget;
    j["threads"] = c.threads;
    j["input"] = c.input;
    j["format"] = c.format;
    return j;
}

Report run(const RunConfig& c, std::ostream& warnings) {
    if (c.N.empty() || c.t.empty() || c.n.empty()) throw std::invalid_argument("--N, --t and --n need values");
    for (Digit N : c.N) {
        if (N < 2) throw std::invalid_argument("--N values must be >= 2");
    }
    for (double t : c.t) {
        if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("--t values must lie in [0,1]");
    }
    if (c.format != "csv" && c.format != "json") throw std::invalid_argument("--format must be csv or json");

    Report r;
    if (c.command == "expand") {
        r = cmd_expand(c);
    } else if (c.command == "convergents") {
        r = cmd_convergents(c);
    } else if (c.command == "cylinder") {
        r = cmd_cylinder(c);
    } else if (c.command == "measure") {
        r = cmd_measure(c);
    } else if (c.command == "pfo") {
        r = cmd_pfo(c);
    } else if (c.command == "orbit2d") {
        r = cmd_orbit2d(c);
    } else if (c.command == "gk") {
        r = cmd_gk(c, warnings);
    } else if (c.command == "rate") {
        r = cmd_gk(c, warnings, true);
    } else if (c.command == "table") {
        r = cmd_table(c);
    } else {
        throw std::invalid_argument("unknown command '" + c.command + "'");
    }
    r.config = config_to_json(c);
    return r;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::string method = "exact";
    std::uint64_t seed = 0;
    std::size_t resolution = 0;
    Digit cutoff = 0;
    int threads = -1;

    CLI::App app{"Renyi-type continued fractions: expansions, invariant measures, transfer operator and "
                 "two-dimensional Gauss-Kuzmin error terms"};
    app.require_subcommand(1);
    app.set_version_flag("--version", report_schema_version());

    const std::vector<std::pair<std::string, std::string>> commands{
        {"expand", "digits and convergents of x"},
        {"convergents", "convergents and determinant identity of a digit word"},
        {"cylinder", "cylinder interval and rho^t weights of a digit word"},
        {"measure", "invariant-measure distribution functions and invariance residual"},
        {"pfo", "transfer-operator iterates with variation bounds"},
        {"orbit2d", "orbit of the natural extension"},
        {"gk", "sup of the two-dimensional Gauss-Kuzmin error with its bounds"},
        {"table", "1/N and 1/N + K_N"},
        {"rate", "fitted convergence ratio of sup errors over n"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--N", c.N, "parameter(s) N >= 2")->delimiter(',');
        sub->add_option("--t", c.t, "seed(s) t in [0,1]")->delimiter(',');
        sub->add_option("--n", c.n, "length / iteration count(s)")->delimiter(',');
        sub->add_option("--x", c.x, "point: p/q exact, decimals via double");
        sub->add_option("--y", c.y, "second coordinate");
        sub->add_option("--digits", c.digits, "digit word a1,a2,...")->delimiter(',');
        sub->add_option("--method", method, "exact | monte-carlo");
        sub->add_option("--resolution", resolution, "grid points per axis");
        sub->add_option("--cutoff", cutoff, "digit cutoff M");
        sub->add_option("--samples", c.samples, "monte-carlo sample count");
        sub->add_option("--seed", seed, "rng seed (required for monte-carlo)");
        sub->add_option("--output", c.output, "output file (default stdout)");
        sub->add_option("--format", c.format, "csv | json");
        sub->add_option("--threads", threads, "worker threads, 0 = auto (env RENYI_CF_THREADS)");
        sub->add_option("--budget", c.budget, "largest exact enumeration size");
        sub->add_option("--input", c.input, "pfo: CSV of breakpoint,value rows");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        out << error_object("UsageError", e.what());
        return 2;
    }

    for (const auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        if (sub->count("--seed")) c.seed = seed;
        if (sub->count("--resolution")) c.resolution = resolution;
        if (sub->count("--cutoff")) c.cutoff = cutoff;
    }
    if (threads < 0) {
        const char* env = std::getenv("RENYI_CF_THREADS");
        threads = env ? std::atoi(env) : 0;
    }
    c.threads = static_cast<unsigned>(std::max(0, threads));

    auto fail = [&](std::string_view type, const std::string& message) {
        err << "error (" << type << "): " << message << "\n";
        const std::string obj = error_object(type, message);
        if (c.output.empty()) {
            out << obj;
        } else {
            std::ofstream f(c.output, std::ios::binary);
            f << obj;
        }
        return 1;
    };

    try {
        c.method = parse_method(method);
        const Report r = run(c, err);
        write_artifact(c, c.format == "json" ? to_json(r) : to_csv(r), out);
        return 0;
    } catch (const Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::invalid_argument& e) {
        return fail("InvalidArgument", e.what());
    } catch (const std::out_of_range& e) {
        return fail("InvalidArgument", e.what());
    } catch (const std::exception& e) {
        return fail("InternalError", e.what());
    }
}

}  // namespace renyi
