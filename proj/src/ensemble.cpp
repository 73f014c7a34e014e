#include "jacobi/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/trieig.hpp"

namespace jacobi {

JacobiParams::JacobiParams(std::size_t n, double a, double b, double beta) : n_(n), a_(a), b_(b), beta_(beta) {
    detail::require(n >= 1, "n must be >= 1");
    detail::require(a > -1.0 && std::isfinite(a), "a must satisfy a > -1, got " + std::to_string(a));
    detail::require(b > -1.0 && std::isfinite(b), "b must satisfy b > -1, got " + std::to_string(b));
    detail::require(beta > 0.0 && std::isfinite(beta), "beta must satisfy beta > 0, got " + std::to_string(beta));
}

JacobiParams JacobiParams::from_tilde(std::size_t n, double a_tilde, double b_tilde, double beta) {
    detail::require(a_tilde > 0.0, "a_tilde must be > 0, got " + std::to_string(a_tilde));
    detail::require(b_tilde > 0.0, "b_tilde must be > 0, got " + std::to_string(b_tilde));
    detail::require(beta > 0.0, "beta must satisfy beta > 0, got " + std::to_string(beta));
    return JacobiParams(n, 0.5 * a_tilde * beta - 1.0, 0.5 * b_tilde * beta - 1.0, beta);
}

AlphaVector::AlphaVector(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    detail::require(n >= 1 && values_.size() == 2 * n - 1, "alpha vector must hold 2n - 1 entries");
    for (double v : values_) detail::require(v > -1.0 && v < 1.0, "alpha entries must lie in (-1, 1)");
}

double AlphaVector::at(long k) const {
    const long last = static_cast<long>(2 * n_) - 1;
    if (k == -2 || k == -1 || k == last) return -1.0;
    if (k < -2 || k > last) throw std::out_of_range("alpha index " + std::to_string(k) + " out of range");
    return values_[static_cast<std::size_t>(k)];
}

BetaParams alpha_shape_params(const JacobiParams& p, std::size_t k) {
    const std::size_t n = p.n();
    if (k > 2 * n - 2) throw std::out_of_range("alpha index " + std::to_string(k) + " outside [0, 2n-2]");
    const double two_n = 2.0 * static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double beta = p.beta();
    if (k % 2 == 0) {
        const double base = (two_n - kk - 2.0) / 4.0 * beta;
        return {base + p.a() + 1.0, base + p.b() + 1.0};
    }
    return {(two_n - kk - 3.0) / 4.0 * beta + p.a() + p.b() + 2.0, (two_n - kk - 1.0) / 4.0 * beta};
}

AlphaVector sample_alphas(const JacobiParams& p, RngStream& rng) {
    std::vector<double> values(2 * p.n() - 1);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = sample_beta_pm1(alpha_shape_params(p, k), rng);
    return AlphaVector(p.n(), std::move(values));
}

AlphaVector mean_alphas(const JacobiParams& p) {
    std::vector<double> values(2 * p.n() - 1);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = beta_mean_pm1(alpha_shape_params(p, k));
    return AlphaVector(p.n(), std::move(values));
}

SymTridiag build_random_tridiag(const AlphaVector& alphas) {
    const std::size_t n = alphas.n();
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const long i = static_cast<long>(k);
        const double odd = alphas.at(2 * i - 1);
        diag[k] = (1.0 - odd) * alphas.at(2 * i) - (1.0 + odd) * alphas.at(2 * i - 2);
        if (k + 1 < n) {
            const double even = alphas.at(2 * i);
            const double arg = (1.0 - odd) * (1.0 - even * even) * (1.0 + alphas.at(2 * i + 1));
            if (arg < 0.0) throw InternalError("negative square-root argument in off-diagonal " + std::to_string(k));
            off[k] = std::sqrt(arg);
        }
    }
    return SymTridiag(std::move(diag), std::move(off));
}

SymTridiag build_mean_tridiag(std::size_t n, double at, double bt) {
    detail::require(n >= 1, "n must be >= 1");
    detail::require(at > 0.0 && bt > 0.0, "a_tilde and b_tilde must be > 0");
    const double nn = static_cast<double>(n);
    const double sum = at + bt;
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double s = 2.0 * static_cast<double>(k) + sum;
        diag[k] = 2.0 * (bt - at) * (bt + at) / (s * (s + 2.0));
    }
    diag[n - 1] = 2.0 * (bt - at) / (2.0 * nn + sum - 2.0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + sum;
        const double num = (kk + sum + 1.0) * (kk + at + 1.0) * (kk + bt + 1.0) * (kk + 1.0);
        off[k] = 4.0 / (s + 2.0) * std::sqrt(num / ((s + 3.0) * (s + 1.0)));
    }
    if (n >= 2) {
        const double num = (nn + at - 1.0) * (nn + bt - 1.0) * (nn - 1.0);
        off[n - 2] = 4.0 / (2.0 * nn + sum - 2.0) * std::sqrt(num / (2.0 * nn + sum - 3.0));
    }
    return SymTridiag(std::move(diag), std::move(off));
}

SymTridiag build_mean_tridiag(const JacobiParams& p) { return build_mean_tridiag(p.n(), p.a_tilde(), p.b_tilde()); }

Spectrum sample_spectrum(const JacobiParams& p, RngStream& rng, unsigned threads) {
    return eig_tridiag(build_random_tridiag(sample_alphas(p, rng)), 1e-14, threads);
}

}  // namespace jacobi
