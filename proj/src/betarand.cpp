#include "jacobi/betarand.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {

BetaParams::BetaParams(double p_, double q_) : p(p_), q(q_) {
    detail::require(p > 0.0 && std::isfinite(p), "beta shape p must be > 0, got " + std::to_string(p));
    detail::require(q > 0.0 && std::isfinite(q), "beta shape q must be > 0, got " + std::to_string(q));
}

double sample_normal(RngStream& rng) {
    for (;;) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double v = 2.0 * rng.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

namespace {

// Marsaglia–Tsang for shape >= 1, returning log of the variate.
double log_gamma_large(double shape, RngStream& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double w;
        do {
            x = sample_normal(rng);
            w = c * x;
        } while (w <= -1.0);
        const double log_v = 3.0 * std::log1p(w);
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d) + log_v;
        // 1 - v + log v written to avoid cancellation when d is huge.
        const double v_minus_1 = w * (3.0 + w * (3.0 + w));
        if (std::log(u) < 0.5 * x2 + d * (log_v - v_minus_1)) return std::log(d) + log_v;
    }
}

}  // namespace

double sample_log_gamma(double shape, RngStream& rng) {
    detail::require(shape > 0.0 && std::isfinite(shape), "gamma shape must be > 0, got " + std::to_string(shape));
    if (shape >= 1.0) return log_gamma_large(shape, rng);
    const double boosted = log_gamma_large(shape + 1.0, rng);
    return boosted + std::log(rng.uniform()) / shape;
}

double sample_gamma(double shape, RngStream& rng) {
    const double value = std::exp(sample_log_gamma(shape, rng));
    return value > 0.0 ? value : std::numeric_limits<double>::denorm_min();
}

double sample_beta01(const BetaParams& params, RngStream& rng) {
    const double lx = sample_log_gamma(params.p, rng);
    const double ly = sample_log_gamma(params.q, rng);
    // X / (X + Y) = 1 / (1 + exp(ly - lx))
    double z = 1.0 / (1.0 + std::exp(ly - lx));
    if (z <= 0.0) z = std::numeric_limits<double>::denorm_min();
    if (z >= 1.0) z = std::nextafter(1.0, 0.0);
    return z;
}

double sample_beta_pm1(const BetaParams& params, RngStream& rng) {
    const double lx = sample_log_gamma(params.p, rng);
    const double ly = sample_log_gamma(params.q, rng);
    double alpha = std::tanh(0.5 * (ly - lx));
    // Keep the support open; tanh saturates once |ly - lx| exceeds ~38.
    if (alpha >= 1.0) alpha = std::nextafter(1.0, 0.0);
    if (alpha <= -1.0) alpha = std::nextafter(-1.0, 0.0);
    return alpha;
}

double beta_mean_pm1(const BetaParams& params) { return (params.q - params.p) / (params.p + params.q); }

double beta_concentration_exponent(double delta) {
    detail::require(delta > 0.0, "delta must be > 0, got " + std::to_string(delta));
    const double d = delta / (3.0 + 2.0 * delta);
    return std::log1p(d) - d;
}

double beta_concentration_bound(const BetaParams& params, double delta) {
    return 4.0 * std::exp(beta_concentration_exponent(delta) * (params.p + params.q));
}

}  // namespace jacobi
