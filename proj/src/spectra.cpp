#include "jacobi/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/polyroots.hpp"
#include "jacobi/trieig.hpp"

namespace jacobi {

Ecdf::Ecdf(std::vector<double> sample) : points_(std::move(sample)) {
    detail::require(!points_.empty(), "empirical distribution needs a non-empty sample");
    std::sort(points_.begin(), points_.end());
}

Ecdf::Ecdf(const Spectrum& s) : Ecdf(std::vector<double>(s.values().begin(), s.values().end())) {}

double Ecdf::operator()(double xi) const {
    const auto it = std::upper_bound(points_.begin(), points_.end(), xi);
    return static_cast<double>(it - points_.begin()) / static_cast<double>(points_.size());
}

double Ecdf::left_limit(double xi) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), xi);
    return static_cast<double>(it - points_.begin()) / static_cast<double>(points_.size());
}

double ecdf_eval(const Ecdf& e, double xi) { return e(xi); }

double ks_distance(const Ecdf& e, const std::function<double(double)>& cdf) {
    const auto pts = e.points();
    const double n = static_cast<double>(pts.size());
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double f = cdf(pts[i]);
        d = std::max({d, std::abs(f - static_cast<double>(i + 1) / n), std::abs(f - static_cast<double>(i) / n)});
    }
    return d;
}

double ks_two_sample(const Ecdf& e, const Ecdf& f) {
    double d = 0.0;
    for (double x : e.points()) d = std::max(d, std::abs(e(x) - f(x)));
    for (double x : f.points()) d = std::max(d, std::abs(e(x) - f(x)));
    return d;
}

namespace {

// F(x) <= G(x + eps) + eps for all x; suffices to check at the jumps of F.
bool dominated(const Ecdf& f, const Ecdf& g, double eps) {
    for (double x : f.points())
        if (f(x) > g(x + eps) + eps) return false;
    return true;
}

}  // namespace

double levy_distance(const Ecdf& e, const Ecdf& f) {
    auto feasible = [&](double eps) { return dominated(e, f, eps) && dominated(f, e, eps); };
    if (feasible(0.0)) return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

ScalingSequence::ScalingSequence(double d, double e, std::size_t n_) : delta(d), epsilon(e), n(n_) {
    detail::require(d > 0.0 && std::isfinite(d), "scaling delta must be > 0");
    detail::require(std::isfinite(e), "scaling epsilon must be finite");
}

double apply_scaling(double lambda, const ScalingSequence& s, ScalingConvention c) {
    switch (c) {
        case ScalingConvention::none: return lambda;
        case ScalingConvention::shift: return (lambda - s.epsilon) / s.delta;
        case ScalingConvention::recurrence: return (lambda - 2.0 * (2.0 * s.epsilon - 1.0)) / (2.0 * s.delta);
    }
    return lambda;
}

ScalingSequence to_shift_form(const ScalingSequence& s) {
    return ScalingSequence(2.0 * s.delta, 2.0 * (2.0 * s.epsilon - 1.0), s.n);
}

DeviationReport deviation_report(const JacobiParams& p, const Spectrum& roots, RngStream& rng) {
    detail::require(roots.size() == p.n(), "root count must equal n");
    const AlphaVector alphas = sample_alphas(p, rng);
    const Spectrum eigs = eig_tridiag(build_random_tridiag(alphas));

    DeviationReport r{};
    for (std::size_t j = 0; j < p.n(); ++j) r.max_dev = std::max(r.max_dev, std::abs(eigs[j] - roots[j]));
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double mean = beta_mean_pm1(alpha_shape_params(p, k));
        r.alpha_deviation = std::max(r.alpha_deviation, std::abs(alphas.values()[k] - mean));
    }
    r.perturbation_bound = 4.0 * std::sqrt(3.0 * r.alpha_deviation) + 6.0 * r.alpha_deviation;
    const double log_n = std::log(static_cast<double>(p.n()));
    const double ab = p.a() + p.b();
    r.scaled_dev = (p.n() >= 2 && ab > 0.0) ? r.max_dev * std::pow(ab / log_n, 0.25)
                                            : std::numeric_limits<double>::quiet_NaN();
    return r;
}

DeviationReport deviation_report(const JacobiParams& p, RngStream& rng) {
    const Spectrum roots = jacobi_roots_scaled({p.n(), p.a_tilde() - 1.0, p.b_tilde() - 1.0});
    return deviation_report(p, roots, rng);
}

double deviation_tail_exponent(double epsilon) {
    detail::require(epsilon > 0.0 && epsilon <= 1.0, "epsilon must lie in (0, 1], got " + std::to_string(epsilon));
    const double e2 = epsilon * epsilon;
    const double u = e2 / (648.0 + 2.0 * e2);
    return std::log1p(u) - u;
}

double deviation_tail_bound(std::size_t n, double a, double b, double epsilon) {
    const double c = deviation_tail_exponent(epsilon);
    return 4.0 * (2.0 * static_cast<double>(n) - 1.0) * std::exp(c * (a + b + 2.0));
}

LimitParams limit_params_at_n(std::size_t n_, double at, double bt, const ScalingSequence& s) {
    const double n = static_cast<double>(n_);
    const double denom = 2.0 * n + at + bt - 2.0;
    detail::require(denom != 0.0, "2n + a_tilde + b_tilde - 2 vanishes");
    const double d = s.delta;
    const double e = s.epsilon;
    const double nb = n + bt - 1.0;
    const double na = n + at - 1.0;
    const double nab = n + at + bt - 2.0;
    LimitParams r{};
    r.a1 = 2.0 / d * (nb / denom - e);
    r.a2 = 2.0 / d * ((n * na + nb * nab) / (denom * denom) - e);
    r.b1 = 4.0 / (d * d) * nb * na * n / (denom * denom * denom);
    r.b2 = 4.0 / (d * d) * nb * na * nab * n / (denom * denom * denom * denom);
    return r;
}

LimitParams limit_params_at_n(const JacobiParams& p, const ScalingSequence& s) {
    return limit_params_at_n(p.n(), p.a_tilde(), p.b_tilde(), s);
}

std::vector<Spectrum> sample_spectra(const JacobiParams& p, const MonteCarloOptions& opts) {
    detail::require(opts.trials >= 1, "trials must be >= 1");
    const unsigned threads = resolve_threads(opts.threads);
    std::vector<std::vector<double>> values(opts.trials);
    const unsigned inner = opts.trials == 1 ? threads : 1;
    parallel_for(opts.trials, threads, [&](std::size_t t) {
        RngStream rng(opts.seed, t);
        values[t] = sample_spectrum(p, rng, inner).take();
    });
    std::vector<Spectrum> out;
    out.reserve(opts.trials);
    for (auto& v : values) out.emplace_back(std::move(v), Provenance::random);
    return out;
}

Ecdf monte_carlo_esd(const JacobiParams& p, const ScalingSequence& s, ScalingConvention convention,
                     const MonteCarloOptions& opts) {
    std::vector<double> pooled;
    pooled.reserve(p.n() * opts.trials);
    for (const Spectrum& spec : sample_spectra(p, opts))
        for (double v : spec.values()) pooled.push_back(apply_scaling(v, s, convention));
    return Ecdf(std::move(pooled));
}

double quantile(std::vector<double> values, double q) {
    detail::require(!values.empty(), "quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - w) + values[hi] * w;
}

}  // namespace jacobi
