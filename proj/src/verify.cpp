#include "jacobi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "jacobi/betarand.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/polyroots.hpp"
#include "jacobi/trieig.hpp"

namespace jacobi {

namespace {

using Clock = std::chrono::steady_clock;

struct Spec {
    const char* name;
    double threshold;
    Comparison comparison;
    double time_limit;
};

Spec spec_for(int id) {
    switch (id) {
        case 1: return {"mean matrix spectrum equals scaled polynomial roots", 1e-10, Comparison::less, 1.0};
        case 2: return {"contiguous polynomial identities", 1e-9, Comparison::less, 1.0};
        case 3: return {"per-realization perturbation bound violations", 0.0, Comparison::less_equal, 10.0};
        case 4: return {"scaled deviation median ratio across n", 3.0, Comparison::less_equal, 120.0};
        case 5: return {"proportional regime ESD vs limit (KS)", 0.05, Comparison::less, 60.0};
        case 6: return {"arcsine regime ESD vs limit (KS)", 0.05, Comparison::less, 60.0};
        case 7: return {"semicircle regime ESD vs limit (KS)", 0.06, Comparison::less, 60.0};
        case 8: return {"general density reproduces proportional density", 1e-8, Comparison::less, 1.0};
        case 9: return {"same-realization F / Jacobi correspondence", 1e-8, Comparison::less, 5.0};
        case 10: return {"F-matrix ESD vs limit (KS)", 0.05, Comparison::less, 60.0};
        case 11: return {"transformed F ESDs vs limits (worst KS / threshold)", 1.0, Comparison::less, 180.0};
        case 12: return {"beta concentration bound, exceedance minus allowance", 0.0, Comparison::less_equal, 30.0};
        case 13: return {"tridiagonal vs dense F route speedup", 5.0, Comparison::greater_equal, 300.0};
        default: throw ParameterError("unknown criterion id " + std::to_string(id) + " (expected 1..13)");
    }
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double pooled_ks(const std::vector<Spectrum>& spectra, const std::function<double(double)>& map,
                 const DensityModel& limit) {
    std::vector<double> pooled;
    for (const Spectrum& s : spectra)
        for (double v : s.values()) pooled.push_back(map(v));
    return ks_distance(Ecdf(std::move(pooled)), [&](double x) { return cdf_eval(limit, x); });
}

double ensemble_ks(const JacobiParams& p, const ScalingSequence& s, const DensityModel& limit, std::size_t trials,
                   const VerifyOptions& opts, std::uint64_t salt) {
    const MonteCarloOptions mc{trials, opts.seed ^ salt, opts.threads};
    return ks_distance(monte_carlo_esd(p, s, ScalingConvention::recurrence, mc),
                       [&](double x) { return cdf_eval(limit, x); });
}

// Each returns (measured, detail).
using Outcome = std::pair<double, std::string>;

Outcome determinant_identity() {
    double worst = 0.0;
    const double grid[] = {0.5, 1.0, 3.7};
    for (std::size_t n = 1; n <= 8; ++n)
        for (double at : grid)
            for (double bt : grid) {
                const Spectrum d = eig_tridiag(build_mean_tridiag(n, at, bt));
                const Spectrum r = jacobi_roots_scaled({n, at - 1.0, bt - 1.0});
                for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(d[i] - r[i]));
            }
    return {worst, "72 parameter sets"};
}

Outcome contiguous_identities(const VerifyOptions& opts) {
    RngStream rng(opts.seed, 2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::size_t>(2 + std::min(8.0, std::floor(9.0 * rng.uniform())));
        const double g = 0.1 + 4.9 * rng.uniform();
        const double d = 0.1 + 4.9 * rng.uniform();
        const double x = 2.0 * rng.uniform() - 1.0;
        const JacobiPolyParams p(n, g, d);
        worst = std::max(worst, identity_residual_degree_step(p, x) / identity_scale_degree_step(p, x));
        worst = std::max(worst, identity_residual_parameter_step(p, x) / identity_scale_parameter_step(p, x));
    }
    return {worst, "100 random points, both identities"};
}

Outcome perturbation_bound(const VerifyOptions& opts) {
    const JacobiParams p(20, 10.0, 10.0, 2.0);
    const Spectrum roots = jacobi_roots_scaled({p.n(), p.a_tilde() - 1.0, p.b_tilde() - 1.0});
    int violations = 0;
    double worst_ratio = 0.0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        RngStream rng(opts.seed ^ 0x3, t);
        const DeviationReport r = deviation_report(p, roots, rng);
        if (r.max_dev > r.perturbation_bound) ++violations;
        worst_ratio = std::max(worst_ratio, r.max_dev / r.perturbation_bound);
    }
    return {static_cast<double>(violations), "1000 trials, largest max_dev / bound " + fmt("%.3g", worst_ratio)};
}

Outcome scaling_proxy(const VerifyOptions& opts) {
    std::vector<double> medians;
    std::string detail = "medians";
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
        const double nn = static_cast<double>(n);
        const JacobiParams p(n, 3.0 * nn, 3.0 * nn, 2.0);
        const Spectrum roots = jacobi_roots_scaled({n, p.a_tilde() - 1.0, p.b_tilde() - 1.0});
        std::vector<double> scaled(200);
        parallel_for(scaled.size(), resolve_threads(opts.threads), [&](std::size_t t) {
            RngStream rng(opts.seed ^ (0x400 + n), t);
            scaled[t] = deviation_report(p, roots, rng).scaled_dev;
        });
        medians.push_back(quantile(scaled, 0.5));
        detail += " " + fmt("%.4g", medians.back());
    }
    const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
    return {*hi / *lo, detail};
}

Outcome proportional_esd(const VerifyOptions& opts) {
    const JacobiParams p = preset_params(LimitModel::proportional, 5000);
    return {ensemble_ks(p, ScalingSequence(0.5, 0.5, p.n()), ProportionalLimit(3.0, 3.0), 1, opts, 0x5), "n = 5000"};
}

Outcome arcsine_esd(const VerifyOptions& opts) {
    const JacobiParams p = preset_params(LimitModel::arcsine, 5000);
    return {ensemble_ks(p, ScalingSequence(0.5, 0.5, p.n()), Arcsine{}, 1, opts, 0x6), "n = 5000"};
}

Outcome semicircle_esd(const VerifyOptions& opts) {
    const JacobiParams p = preset_params(LimitModel::semicircle, 3000);
    const ScalingSequence s = canonical_scaling(LimitModel::semicircle, p);
    return {ensemble_ks(p, s, Semicircle(std::sqrt(2.0)), 1, opts, 0x7), "n = 3000"};
}

Outcome general_density() {
    const DensityModel g = GeneralLimit(0.0, 0.0, 0.5, 7.0 / 16.0);
    const DensityModel e = ProportionalLimit(3.0, 3.0);
    const Support s = support(e);
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double x = s.lo + (s.hi - s.lo) * i / 101.0;
        worst = std::max(worst, std::abs(density_eval(g, x) - density_eval(e, x)));
    }
    return {worst, "100-point grid"};
}

Outcome f_correspondence(const VerifyOptions& opts) {
    const FDims d(6, 40, 60);
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        RngStream rng(opts.seed ^ 0x9, s);
        const GaussianPair g = sample_gaussian_pair(d, rng);
        std::vector<double> mapped;
        const Spectrum f = f_eigs_direct(g, d);
        for (double v : f.values()) mapped.push_back(f_to_jacobi(v, d));
        std::sort(mapped.begin(), mapped.end());
        const Spectrum a = a_n_eigs(g, d);
        for (std::size_t i = 0; i < mapped.size(); ++i) worst = std::max(worst, std::abs(mapped[i] - a[i]));
    }
    return {worst, "50 seeds"};
}

Outcome f_esd(const VerifyOptions& opts) {
    const FDims d(2000, 4000, 6000);
    const MonteCarloOptions mc{1, opts.seed ^ 0xA, opts.threads};
    const auto spectra = sample_f_spectra(d, FRoute::tridiag, FTransform::none, mc);
    return {pooled_ks(spectra, [](double v) { return v; }, FLimit(0.5, 1.0 / 3.0)), "n = 2000"};
}

Outcome transformed_f_esd(const VerifyOptions& opts) {
    const std::pair<FTransform, double> cases[] = {
        {FTransform::semicircle, 0.07}, {FTransform::hard_edge, 0.07}, {FTransform::shifted, 0.08}};
    double worst = 0.0;
    std::string detail = "KS";
    for (const auto& [t, limit] : cases) {
        const FSetup s = f_preset_setup(t);
        const MonteCarloOptions mc{s.trials, opts.seed ^ 0xB, opts.threads};
        const auto spectra = sample_f_spectra(s.dims, FRoute::tridiag, t, mc);
        const double ks = pooled_ks(spectra, [](double v) { return v; }, s.limit);
        worst = std::max(worst, ks / limit);
        detail += " " + std::string(to_string(t)) + "=" + fmt("%.4f", ks) + "/" + fmt("%.2f", limit);
    }
    return {worst, detail};
}

Outcome beta_concentration(const VerifyOptions& opts) {
    const std::pair<double, double> shapes[] = {{5, 5}, {50, 80}, {500, 500}};
    const double deltas[] = {0.1, 0.2, 0.3};
    constexpr int draws = 100000;
    double worst = -1.0;
    std::uint64_t cell = 0;
    for (const auto& [p, q] : shapes)
        for (double delta : deltas) {
            RngStream rng(opts.seed ^ 0xC, cell++);
            const BetaParams bp(p, q);
            const double mean = p / (p + q);
            int hits = 0;
            for (int i = 0; i < draws; ++i)
                if (std::abs(sample_beta01(bp, rng) - mean) > delta) ++hits;
            const double freq = static_cast<double>(hits) / draws;
            const double bound = std::min(1.0, beta_concentration_bound(bp, delta));
            const double se = std::sqrt(bound * (1.0 - bound) / draws);
            worst = std::max(worst, freq - bound - 3.0 * se);
        }
    return {worst, "9 cells of 1e5 draws"};
}

template <class Fn>
double seconds_of(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome route_speedup(const VerifyOptions& opts) {
    const FDims big(2000, 4000, 6000);
    const FDims small(400, 800, 1200);
    RngStream rng(opts.seed ^ 0xD, 0);
    const double t_tri = seconds_of([&] { (void)f_eigs_tridiag(big, rng, 1); });
    const GaussianPair g = sample_gaussian_pair(small, rng);
    const double t_dense = seconds_of([&] { (void)f_eigs_direct(g, small); });
    const double scale = std::pow(2000.0 / 400.0, 3.0);
    const double speedup = t_dense * scale / t_tri;
    return {speedup, "tridiag n=2000 " + fmt("%.3f", t_tri) + " s, dense n=400 " + fmt("%.3f", t_dense) +
                         " s (x125 for n=2000); target 20x " + (speedup >= 20.0 ? "met" : "not met")};
}

Outcome measure(int id, const VerifyOptions& opts) {
    switch (id) {
        case 1: return determinant_identity();
        case 2: return contiguous_identities(opts);
        case 3: return perturbation_bound(opts);
        case 4: return scaling_proxy(opts);
        case 5: return proportional_esd(opts);
        case 6: return arcsine_esd(opts);
        case 7: return semicircle_esd(opts);
        case 8: return general_density();
        case 9: return f_correspondence(opts);
        case 10: return f_esd(opts);
        case 11: return transformed_f_esd(opts);
        case 12: return beta_concentration(opts);
        case 13: return route_speedup(opts);
        default: throw ParameterError("unknown criterion id " + std::to_string(id));
    }
}

bool compare(double measured, double threshold, Comparison c) {
    switch (c) {
        case Comparison::less: return measured < threshold;
        case Comparison::less_equal: return measured <= threshold;
        case Comparison::greater_equal: return measured >= threshold;
    }
    return false;
}

}  // namespace

std::string_view to_string(Comparison c) {
    switch (c) {
        case Comparison::less: return "<";
        case Comparison::less_equal: return "<=";
        case Comparison::greater_equal: return ">=";
    }
    return "?";
}

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}; }

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    detail::require(opts.tolerance_scale > 0.0, "tolerance scale must be > 0");
    const Spec spec = spec_for(id);
    double threshold = spec.threshold;
    if (spec.comparison == Comparison::greater_equal)
        threshold /= opts.tolerance_scale;
    else
        threshold *= opts.tolerance_scale;

    CriterionResult r{id, spec.name, false, 0.0, threshold, spec.comparison, 0.0, spec.time_limit, ""};
    Outcome out;
    r.seconds = seconds_of([&] { out = measure(id, opts); });
    r.measured = out.first;
    r.detail = out.second;
    r.passed = compare(r.measured, r.threshold, r.comparison) && r.seconds <= r.time_limit;
    if (r.seconds > r.time_limit) r.detail += "; exceeded time limit " + fmt("%.0f", r.time_limit) + " s";
    return r;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& opts,
                                          const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id, opts));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s [%2d] %s: measured %.4g %s %.4g (%.2f s) %s", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.measured, std::string(to_string(r.comparison)).c_str(), r.threshold, r.seconds,
                  r.detail.c_str());
    return buf;
}

}  // namespace jacobi
