#include "jacobi/polyroots.hpp"

#include <cmath>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/trieig.hpp"

namespace jacobi {

JacobiPolyParams::JacobiPolyParams(std::size_t n, double g, double d) : degree(n), gamma(g), delta(d) {
    detail::require(g > -1.0 && std::isfinite(g), "Jacobi exponent gamma must be > -1, got " + std::to_string(g));
    detail::require(d > -1.0 && std::isfinite(d), "Jacobi exponent delta must be > -1, got " + std::to_string(d));
}

double pochhammer(double a, std::size_t n) {
    double r = 1.0;
    for (std::size_t k = 0; k < n; ++k) r *= a + static_cast<double>(k);
    return r;
}

double jacobi_eval(const JacobiPolyParams& p, double x) {
    const double g = p.gamma;
    const double d = p.delta;
    if (p.degree == 0) return 1.0;
    double prev = 1.0;
    double cur = 0.5 * ((g + d + 2.0) * x + (g - d));
    for (std::size_t m = 2; m <= p.degree; ++m) {
        const double k = static_cast<double>(m);
        const double s = 2.0 * k + g + d;
        const double a1 = 2.0 * k * (k + g + d) * (s - 2.0);
        const double a2 = (s - 1.0) * (g - d) * (g + d);
        const double a3 = (s - 1.0) * s * (s - 2.0);
        const double a4 = 2.0 * (k + g - 1.0) * (k + d - 1.0) * s;
        const double next = ((a3 * x + a2) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    return cur;
}

double monic_factor(const JacobiPolyParams& p) {
    const double base = static_cast<double>(p.degree) + p.gamma + p.delta + 1.0;
    double r = 1.0;
    for (std::size_t k = 1; k <= p.degree; ++k) {
        const double denom = base + static_cast<double>(k - 1);
        if (denom == 0.0) throw ParameterError("Pochhammer divisor vanishes in monic_factor");
        r *= 2.0 * static_cast<double>(k) / denom;
    }
    return r;
}

double monic_shift(double g, double d, std::size_t k) {
    if (k == 0) return (d - g) / (g + d + 2.0);
    const double s = 2.0 * static_cast<double>(k) + g + d;
    return (d - g) * (d + g) / (s * (s + 2.0));
}

double monic_product(double g, double d, std::size_t k) {
    if (k == 0) return 0.0;
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + g + d;
    if (k == 1) return 4.0 * (1.0 + g) * (1.0 + d) / (s * s * (s + 1.0));
    return 4.0 * kk * (kk + g) * (kk + d) * (kk + g + d) / (s * s * (s + 1.0) * (s - 1.0));
}

SymTridiag jacobi_recurrence_matrix(const JacobiPolyParams& p) {
    detail::require(p.degree >= 1, "root computation needs degree >= 1");
    const std::size_t n = p.degree;
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);
    for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * monic_shift(p.gamma, p.delta, k);
    for (std::size_t k = 0; k + 1 < n; ++k) off[k] = 2.0 * std::sqrt(monic_product(p.gamma, p.delta, k + 1));
    return SymTridiag(std::move(diag), std::move(off));
}

Spectrum jacobi_roots_scaled(const JacobiPolyParams& p, unsigned threads) {
    auto spectrum = eig_tridiag(jacobi_recurrence_matrix(p), 1e-14, threads);
    return Spectrum(std::move(spectrum).take(), Provenance::deterministic);
}

namespace {

struct Terms {
    double t1;
    double t2;
    double t3;
};

Terms degree_step_terms(const JacobiPolyParams& p, double x) {
    detail::require(p.degree >= 2, "degree-step identity needs n >= 2");
    const double n = static_cast<double>(p.degree);
    const double g = p.gamma;
    const double d = p.delta;
    return {(n + d - 1.0) * jacobi_eval({p.degree - 2, g, d}, x),
            (n + g + d - 1.0) * jacobi_eval({p.degree - 1, g, d}, x),
            (2.0 * n + g + d - 2.0) * jacobi_eval({p.degree - 1, g - 1.0, d}, x)};
}

Terms parameter_step_terms(const JacobiPolyParams& p, double x) {
    detail::require(p.degree >= 1, "parameter-step identity needs n >= 1");
    const double n = static_cast<double>(p.degree);
    const double g = p.gamma;
    const double d = p.delta;
    return {(n + g - 1.0) * jacobi_eval({p.degree - 1, g - 1.0, d}, x),
            (2.0 * n + g + d - 1.0) * jacobi_eval({p.degree, g - 1.0, d - 1.0}, x),
            (n + g + d - 1.0) * jacobi_eval({p.degree, g - 1.0, d}, x)};
}

}  // namespace

double identity_residual_degree_step(const JacobiPolyParams& p, double x) {
    const Terms t = degree_step_terms(p, x);
    return std::abs(t.t1 - t.t2 + t.t3);
}

double identity_residual_parameter_step(const JacobiPolyParams& p, double x) {
    const Terms t = parameter_step_terms(p, x);
    return std::abs(t.t1 - t.t2 + t.t3);
}

double identity_scale_degree_step(const JacobiPolyParams& p, double x) {
    const Terms t = degree_step_terms(p, x);
    return std::abs(t.t1) + std::abs(t.t2) + std::abs(t.t3);
}

double identity_scale_parameter_step(const JacobiPolyParams& p, double x) {
    const Terms t = parameter_step_terms(p, x);
    return std::abs(t.t1) + std::abs(t.t2) + std::abs(t.t3);
}

}  // namespace jacobi
