#include "jacobi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "jacobi/errors.hpp"
#include "jacobi/experiments.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/polyroots.hpp"
#include "jacobi/verify.hpp"

namespace jacobi::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Args {
    std::size_t n = 0;
    double a = 0.0;
    double b = 0.0;
    double beta = 2.0;
    double a_tilde = 0.0;
    double b_tilde = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t trials = 0;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    double eps = 1.0;
    std::string model = "proportional";
    std::string route = "tridiag";
    std::string transform = "none";
    std::string scaling = "auto";
    std::size_t grid = 0;
    std::size_t bins = 0;
    std::string out;
    std::string format = "csv";
    double tolerance_scale = 1.0;
    std::vector<int> criteria;
};

// Options registered on one subcommand, to ask which were given.
struct Given {
    CLI::Option* n = nullptr;
    CLI::Option* a = nullptr;
    CLI::Option* b = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* a_tilde = nullptr;
    CLI::Option* b_tilde = nullptr;
    CLI::Option* n1 = nullptr;
    CLI::Option* n2 = nullptr;
    CLI::Option* trials = nullptr;
    CLI::Option* format = nullptr;

    static bool has(const CLI::Option* o) { return o != nullptr && o->count() > 0; }
};

void add_common(CLI::App* app, Args& args) {
    app->add_option("--seed", args.seed, "Base seed of the random streams")->default_str("0x4A41434F424921");
    app->add_option("--threads", args.threads, "Worker cap (0: JACOBI_SPECTRA_THREADS or hardware)");
    app->add_option("--out", args.out, "Output file (default: standard output)");
}

void add_ensemble(CLI::App* app, Args& args, Given& g) {
    g.n = app->add_option("--n", args.n, "Matrix size");
    g.a = app->add_option("--a", args.a, "Weight exponent at +2 (a > -1)");
    g.b = app->add_option("--b", args.b, "Weight exponent at -2 (b > -1)");
    g.beta = app->add_option("--beta", args.beta, "Repulsion exponent (beta > 0)");
    g.a_tilde = app->add_option("--a-tilde", args.a_tilde, "Effective exponent (2a+2)/beta; overrides --a");
    g.b_tilde = app->add_option("--b-tilde", args.b_tilde, "Effective exponent (2b+2)/beta; overrides --b");
}

CLI::Option* add_format(CLI::App* app, Args& args) {
    return app->add_option("--format", args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

// Starts from `base` and overrides whatever was given on the command line.
JacobiParams resolve_params(const Args& args, const Given& g, const JacobiParams& base) {
    const std::size_t n = Given::has(g.n) ? args.n : base.n();
    const double beta = Given::has(g.beta) ? args.beta : base.beta();
    double a = Given::has(g.a) ? args.a : base.a();
    double b = Given::has(g.b) ? args.b : base.b();
    if (Given::has(g.a_tilde)) {
        detail::require(args.a_tilde > 0.0, "a_tilde must be > 0");
        a = 0.5 * args.a_tilde * beta - 1.0;
    }
    if (Given::has(g.b_tilde)) {
        detail::require(args.b_tilde > 0.0, "b_tilde must be > 0");
        b = 0.5 * args.b_tilde * beta - 1.0;
    }
    return JacobiParams(n, a, b, beta);
}

json params_json(const JacobiParams& p) {
    return json{{"n", p.n()},       {"a", p.a()},
                {"b", p.b()},       {"beta", p.beta()},
                {"a_tilde", p.a_tilde()}, {"b_tilde", p.b_tilde()}};
}

json quantiles_json(const std::vector<double>& v) {
    return json{{"min", quantile(v, 0.0)},  {"q05", quantile(v, 0.05)}, {"q25", quantile(v, 0.25)},
                {"median", quantile(v, 0.5)}, {"q75", quantile(v, 0.75)}, {"q95", quantile(v, 0.95)},
                {"max", quantile(v, 1.0)}};
}

json header(const char* command) { return json{{"schema_version", 1}, {"command", command}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

// "<dir>/<stem><suffix>" next to the main output file.
std::string side_path(const std::string& out, const std::string& suffix) {
    const std::filesystem::path p(out);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

std::string spectra_csv(const std::vector<Spectrum>& spectra) {
    std::string s = "trial,index,value\n";
    for (std::size_t t = 0; t < spectra.size(); ++t)
        for (std::size_t i = 0; i < spectra[t].size(); ++i)
            s += std::to_string(t) + "," + std::to_string(i + 1) + "," + format_number(spectra[t][i]) + "\n";
    return s;
}

json spectra_json(const std::vector<Spectrum>& spectra) {
    json arr = json::array();
    for (const Spectrum& s : spectra) arr.push_back(std::vector<double>(s.values().begin(), s.values().end()));
    return arr;
}

int cmd_sample(const Args& args, const Given& g, std::ostream& out) {
    const JacobiParams p = resolve_params(args, g, JacobiParams(10, 0.0, 0.0, 2.0));
    const MonteCarloOptions mc{Given::has(g.trials) ? args.trials : 1, args.seed, args.threads};
    const auto spectra = sample_spectra(p, mc);
    if (args.format == "json") {
        json j = header("sample");
        j["params"] = params_json(p);
        j["seed"] = args.seed;
        j["trials"] = spectra_json(spectra);
        emit(dump(j), args.out, out);
    } else {
        emit(spectra_csv(spectra), args.out, out);
    }
    return kOk;
}

int cmd_roots(const Args& args, const Given& g, std::ostream& out) {
    const JacobiParams p = resolve_params(args, g, JacobiParams(10, 0.0, 0.0, 2.0));
    const Spectrum r = jacobi_roots_scaled({p.n(), p.a_tilde() - 1.0, p.b_tilde() - 1.0}, resolve_threads(args.threads));
    if (args.format == "json") {
        json j = header("roots");
        j["params"] = params_json(p);
        j["roots"] = std::vector<double>(r.values().begin(), r.values().end());
        emit(dump(j), args.out, out);
    } else {
        std::string s = "index,value\n";
        for (std::size_t i = 0; i < r.size(); ++i) s += std::to_string(i + 1) + "," + format_number(r[i]) + "\n";
        emit(s, args.out, out);
    }
    return kOk;
}

int cmd_deviation(const Args& args, const Given& g, std::ostream& out) {
    const JacobiParams p = resolve_params(args, g, JacobiParams(20, 10.0, 10.0, 2.0));
    const std::size_t trials = Given::has(g.trials) ? args.trials : 1000;
    detail::require(trials >= 1, "trials must be >= 1");
    const double tail = deviation_tail_bound(p.n(), p.a(), p.b(), args.eps);
    const Spectrum roots = jacobi_roots_scaled({p.n(), p.a_tilde() - 1.0, p.b_tilde() - 1.0});
    std::vector<DeviationReport> reports(trials);
    parallel_for(trials, resolve_threads(args.threads), [&](std::size_t t) {
        RngStream rng(args.seed, t);
        reports[t] = deviation_report(p, roots, rng);
    });

    if (args.format == "csv") {
        std::string s = "trial,max_dev,alpha_deviation,perturbation_bound,scaled_dev\n";
        for (std::size_t t = 0; t < trials; ++t) {
            const DeviationReport& r = reports[t];
            s += std::to_string(t) + "," + format_number(r.max_dev) + "," + format_number(r.alpha_deviation) + "," +
                 format_number(r.perturbation_bound) + "," + format_number(r.scaled_dev) + "\n";
        }
        emit(s, args.out, out);
        return kOk;
    }

    std::vector<double> max_dev, alpha_dev, scaled;
    std::size_t violations = 0;
    std::size_t exceed = 0;
    for (const DeviationReport& r : reports) {
        max_dev.push_back(r.max_dev);
        alpha_dev.push_back(r.alpha_deviation);
        if (std::isfinite(r.scaled_dev)) scaled.push_back(r.scaled_dev);
        if (r.max_dev > r.perturbation_bound) ++violations;
        if (r.max_dev > args.eps) ++exceed;
    }
    json j = header("deviation");
    j["params"] = params_json(p);
    j["seed"] = args.seed;
    j["trials"] = trials;
    j["eps"] = args.eps;
    j["max_dev_quantiles"] = quantiles_json(max_dev);
    j["alpha_deviation_quantiles"] = quantiles_json(alpha_dev);
    j["perturbation_bound_violations"] = violations;
    j["tail_bound"] = tail;
    j["tail_bound_exponent"] = deviation_tail_exponent(args.eps);
    j["empirical_exceedance"] = static_cast<double>(exceed) / static_cast<double>(trials);
    j["scaled_dev_median"] = scaled.empty() ? json(nullptr) : json(quantile(scaled, 0.5));
    emit(dump(j), args.out, out);
    return kOk;
}

std::string histogram_csv(const std::vector<double>& sorted, double lo, double hi, std::size_t bins) {
    std::vector<std::size_t> counts(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : sorted) {
        auto k = static_cast<std::size_t>(std::clamp((v - lo) / width, 0.0, static_cast<double>(bins - 1)));
        ++counts[k];
    }
    std::string s = "bin_left,bin_right,count\n";
    for (std::size_t k = 0; k < bins; ++k) {
        const double left = lo + width * static_cast<double>(k);
        const double right = k + 1 == bins ? hi : lo + width * static_cast<double>(k + 1);
        s += format_number(left) + "," + format_number(right) + "," + std::to_string(counts[k]) + "\n";
    }
    return s;
}

std::string density_csv(const DensityModel& m, std::size_t points) {
    const Support sup = support(m);
    std::string s = "x,f\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double x = points == 1 ? 0.5 * (sup.lo + sup.hi)
                                     : sup.lo + (sup.hi - sup.lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        s += format_number(x) + "," + format_number(density_eval(m, x)) + "\n";
    }
    return s;
}

int cmd_compare(const Args& args, const Given& g, std::ostream& out) {
    const LimitModel m = parse_limit_model(args.model);
    const std::size_t n = Given::has(g.n) ? args.n : preset_n(m);
    const JacobiParams p = resolve_params(args, g, preset_params(m, n));
    EnsembleSetup s = make_setup(m, p, Given::has(g.trials) ? args.trials : preset_trials(m));
    if (args.scaling == "none") s = EnsembleSetup{p, ScalingSequence(0.5, 0.5, p.n()), s.limit, s.trials};
    detail::require(args.scaling == "auto" || args.scaling == "none", "scaling must be auto or none");
    if ((args.bins > 0 || args.grid > 0) && args.out.empty())
        throw ParameterError("--bins and --grid write side files next to --out; give --out");

    const Ecdf e = monte_carlo_esd(p, s.scaling, ScalingConvention::recurrence,
                                   MonteCarloOptions{s.trials, args.seed, args.threads});
    const double ks = ks_distance(e, [&](double x) { return cdf_eval(s.limit, x); });
    const Support sup = support(s.limit);
    const ScalingSequence shift = to_shift_form(s.scaling);

    json j = header("compare");
    j["model"] = model_name(s.limit);
    j["regime"] = to_string(m);
    j["params"] = params_json(p);
    j["seed"] = args.seed;
    j["trials"] = s.trials;
    j["scaling"] = json{{"convention", "recurrence"}, {"delta", s.scaling.delta}, {"epsilon", s.scaling.epsilon}};
    j["scaling_condition"] = scaling_condition(p, shift);
    j["n_pooled"] = e.size();
    j["ks"] = ks;
    j["support"] = {sup.lo, sup.hi};
    if (args.bins > 0) {
        const auto pts = e.points();
        const double lo = std::min(sup.lo, pts.front());
        const double hi = std::max(sup.hi, pts.back());
        const std::string path = side_path(args.out, "_hist.csv");
        emit(histogram_csv(std::vector<double>(pts.begin(), pts.end()), lo, hi, args.bins), path, out);
        j["histogram_csv"] = path;
    }
    if (args.grid > 0) {
        const std::string path = side_path(args.out, "_density.csv");
        emit(density_csv(s.limit, args.grid), path, out);
        j["density_csv"] = path;
    }
    emit(dump(j), args.out, out);
    return kOk;
}

int cmd_fmatrix(const Args& args, const Given& g, std::ostream& out) {
    const FRoute route = parse_f_route(args.route);
    const FTransform t = parse_f_transform(args.transform);
    const std::size_t n = Given::has(g.n) ? args.n : f_preset_n(t);
    detail::require(n >= 1, "n must be >= 1");
    const FDims preset = f_preset_dims(t, n);
    const FDims d(n, Given::has(g.n1) ? args.n1 : preset.n1(), Given::has(g.n2) ? args.n2 : preset.n2());
    const std::size_t trials = Given::has(g.trials) ? args.trials : f_preset_trials(t);
    const auto spectra = sample_f_spectra(d, route, t, MonteCarloOptions{trials, args.seed, args.threads});

    std::vector<double> pooled;
    for (const Spectrum& s : spectra) pooled.insert(pooled.end(), s.values().begin(), s.values().end());
    json j = header("fmatrix");
    j["route"] = to_string(route);
    j["transform"] = to_string(t);
    j["dims"] = json{{"n", d.n()}, {"n1", d.n1()}, {"n2", d.n2()}};
    j["induced_params"] = params_json(d.jacobi_params());
    j["seed"] = args.seed;
    j["trials"] = trials;
    j["n_pooled"] = pooled.size();
    j["quantiles"] = quantiles_json(pooled);
    try {
        const DensityModel limit = f_limit(t, d);
        j["model"] = model_name(limit);
        j["ks"] = ks_distance(Ecdf(pooled), [&](double x) { return cdf_eval(limit, x); });
    } catch (const ParameterError&) {
        j["model"] = nullptr;
        j["ks"] = nullptr;
    }

    if (args.format == "json") {
        j["spectra"] = spectra_json(spectra);
        emit(dump(j), args.out, out);
    } else {
        emit(spectra_csv(spectra), args.out, out);
        if (!args.out.empty()) emit(dump(j), side_path(args.out, "_summary.json"), out);
    }
    return kOk;
}

int cmd_verify(const Args& args, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.seed = args.seed;
    opts.threads = args.threads;
    opts.tolerance_scale = args.tolerance_scale;
    const std::vector<int> ids = args.criteria.empty() ? criterion_ids() : args.criteria;
    const auto results = run_criteria(ids, opts, [&](const CriterionResult& r) { err << format_result(r) << "\n"; });

    bool all = true;
    json list = json::array();
    for (const CriterionResult& r : results) {
        all = all && r.passed;
        list.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"measured", r.measured},
                            {"comparison", to_string(r.comparison)},
                            {"threshold", r.threshold},
                            {"seconds", r.seconds},
                            {"time_limit", r.time_limit},
                            {"detail", r.detail}});
    }
    json j = header("verify");
    j["seed"] = args.seed;
    j["tolerance_scale"] = args.tolerance_scale;
    j["all_passed"] = all;
    j["criteria"] = list;
    emit(dump(j), args.out, out);
    return all ? kOk : kVerifyFailed;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta-Jacobi ensemble sampler, polynomial roots and spectral limit checks", "jacobi_spectra"};
    app.require_subcommand(1);
    Args args;

    Given sample_g, roots_g, dev_g, cmp_g, f_g;

    auto* sample = app.add_subcommand("sample", "Eigenvalues of the random tridiagonal model (CSV trial,index,value)");
    add_ensemble(sample, args, sample_g);
    sample_g.trials = sample->add_option("--trials", args.trials, "Independent realizations (default 1)");
    add_format(sample, args);
    add_common(sample, args);

    auto* roots = app.add_subcommand("roots", "Roots of the Jacobi polynomial on [-2, 2] (CSV index,value)");
    add_ensemble(roots, args, roots_g);
    add_format(roots, args);
    add_common(roots, args);

    auto* dev = app.add_subcommand("deviation", "Deviation of sampled eigenvalues from the roots (JSON)");
    add_ensemble(dev, args, dev_g);
    dev_g.trials = dev->add_option("--trials", args.trials, "Realizations (default 1000)");
    dev->add_option("--eps", args.eps, "Threshold for the tail bound, in (0, 1]");
    dev_g.format = add_format(dev, args);
    add_common(dev, args);

    auto* cmp = app.add_subcommand("compare", "Rescaled ESD against its limit density (JSON, optional CSVs)");
    cmp->add_option("--model", args.model,
                    "general, proportional, arcsine, semicircle, hard-edge, shifted-semicircle");
    add_ensemble(cmp, args, cmp_g);
    cmp_g.trials = cmp->add_option("--trials", args.trials, "Realizations pooled");
    cmp->add_option("--scaling", args.scaling, "auto (regime scaling) or none")
        ->check(CLI::IsMember({"auto", "none"}));
    cmp->add_option("--bins", args.bins, "Histogram bins written to <out>_hist.csv");
    cmp->add_option("--grid", args.grid, "Density grid points written to <out>_density.csv");
    add_common(cmp, args);

    auto* fm = app.add_subcommand("fmatrix", "F-matrix spectra by the dense or tridiagonal route");
    f_g.n = fm->add_option("--n", args.n, "Rows of X and Y");
    f_g.n1 = fm->add_option("--n1", args.n1, "Columns of X (>= n)");
    f_g.n2 = fm->add_option("--n2", args.n2, "Columns of Y (>= n)");
    f_g.trials = fm->add_option("--trials", args.trials, "Realizations");
    fm->add_option("--route", args.route, "direct (n <= 500) or tridiag")->check(CLI::IsMember({"direct", "tridiag"}));
    fm->add_option("--transform", args.transform, "none, thm42, thm43 or thm44")
        ->check(CLI::IsMember({"none", "thm42", "thm43", "thm44"}));
    add_format(fm, args);
    add_common(fm, args);

    auto* ver = app.add_subcommand("verify", "Run the acceptance criteria (JSON report; exit 0 iff all pass)");
    ver->add_option("--criteria", args.criteria, "Subset of criterion ids")->check(CLI::Range(1, 13));
    ver->add_option("--tolerance-scale", args.tolerance_scale, "Multiply every tolerance (tightens below 1)");
    add_common(ver, args);

    std::vector<std::string> argv{"jacobi_spectra"};
    argv.insert(argv.end(), argv_in.begin(), argv_in.end());
    std::vector<const char*> cargs;
    for (const auto& s : argv) cargs.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    }

    try {
        if (*sample) return cmd_sample(args, sample_g, out);
        if (*roots) return cmd_roots(args, roots_g, out);
        if (*dev) {
            if (!Given::has(dev_g.format)) args.format = "json";
            return cmd_deviation(args, dev_g, out);
        }
        if (*cmp) return cmd_compare(args, cmp_g, out);
        if (*fm) return cmd_fmatrix(args, f_g, out);
        if (*ver) return cmd_verify(args, out, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kNumericalError;
    }
    return kParameterError;
}

}  // namespace jacobi::cli
