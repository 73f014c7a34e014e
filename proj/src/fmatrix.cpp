#include "jacobi/fmatrix.hpp"

#include <cmath>
#include <string>

#include "jacobi/betarand.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/trieig.hpp"

namespace jacobi {

FDims::FDims(std::size_t n, std::size_t n1, std::size_t n2) : n_(n), n1_(n1), n2_(n2) {
    detail::require(n >= 1, "n must be >= 1");
    detail::require(n1 >= n, "n1 must be >= n, got n1 = " + std::to_string(n1) + ", n = " + std::to_string(n));
    detail::require(n2 >= n, "n2 must be >= n, got n2 = " + std::to_string(n2) + ", n = " + std::to_string(n));
}

JacobiParams FDims::jacobi_params() const {
    const double n = static_cast<double>(n_);
    return JacobiParams(n_, 0.5 * (static_cast<double>(n1_) - n - 1.0), 0.5 * (static_cast<double>(n2_) - n - 1.0),
                        1.0);
}

namespace {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, RngStream& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (double& v : m.row(i)) v = sample_normal(rng);
    return m;
}

void check_dense(const FDims& d) {
    detail::require(d.n() <= kDenseLimit, "dense F-matrix route is limited to n <= " + std::to_string(kDenseLimit) +
                                              ", got n = " + std::to_string(d.n()));
}

Matrix combine(const Matrix& a, double sa, const Matrix& b, double sb) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = sa * a(i, j) + sb * b(i, j);
    return r;
}

}  // namespace

GaussianPair sample_gaussian_pair(const FDims& d, RngStream& rng) {
    GaussianPair g;
    g.x = gaussian_matrix(d.n(), d.n1(), rng);
    g.y = gaussian_matrix(d.n(), d.n2(), rng);
    return g;
}

Spectrum f_eigs_direct(const GaussianPair& g, const FDims& d) {
    check_dense(d);
    const Matrix xx = gram_rows(g.x);
    const Matrix yy = gram_rows(g.y);
    DenseSym a(combine(xx, 1.0 / static_cast<double>(d.n1()), xx, 0.0));
    DenseSym b(combine(yy, 1.0 / static_cast<double>(d.n2()), yy, 0.0));
    return Spectrum(eig_generalized_sym(a, b).take(), Provenance::random);
}

Spectrum a_n_eigs(const GaussianPair& g, const FDims& d) {
    check_dense(d);
    const Matrix xx = gram_rows(g.x);
    const Matrix yy = gram_rows(g.y);
    DenseSym a(combine(yy, 2.0, xx, -2.0));
    DenseSym b(combine(yy, 1.0, xx, 1.0));
    return Spectrum(eig_generalized_sym(a, b).take(), Provenance::random);
}

double jacobi_to_f(double lambda_j, const FDims& d) {
    detail::require(lambda_j > -2.0, "jacobi_to_f has a pole at -2; argument must exceed -2, got " +
                                         std::to_string(lambda_j));
    return std::max(0.0, d.ratio() * (2.0 - lambda_j) / (2.0 + lambda_j));
}

double f_to_jacobi(double lambda_f, const FDims& d) {
    detail::require(lambda_f >= 0.0, "F eigenvalue must be >= 0");
    const double r = d.ratio();
    return 2.0 * (r - lambda_f) / (r + lambda_f);
}

Spectrum f_eigs_tridiag(const FDims& d, RngStream& rng, unsigned threads) {
    const Spectrum j = sample_spectrum(d.jacobi_params(), rng, threads);
    std::vector<double> f;
    f.reserve(j.size());
    for (double v : j.values()) f.push_back(jacobi_to_f(v, d));
    return Spectrum(std::move(f), Provenance::transformed);
}

double semicircle_f_transform(double lambda_f, const FDims& d) {
    detail::require(lambda_f >= 0.0, "F eigenvalue must be >= 0");
    const double n = static_cast<double>(d.n());
    const double n1 = static_cast<double>(d.n1());
    const double n2 = static_cast<double>(d.n2());
    return 2.0 * std::sqrt(n1 / n - 1.0) * ((n2 - n) / (n1 + n2 - 2.0 * n) - n2 / (n1 * lambda_f + n2));
}

double hard_edge_f_transform(double lambda_f, const FDims& d) {
    detail::require(lambda_f >= 0.0, "F eigenvalue must be >= 0");
    const double n = static_cast<double>(d.n());
    const double n1 = static_cast<double>(d.n1());
    const double n2 = static_cast<double>(d.n2());
    detail::require(n1 > n, "hard-edge transform needs n1 > n");
    return n / (2.0 * (n1 - n)) * (lambda_f * n1 / n2 + 1.0);
}

double shifted_f_transform(double lambda_f, const FDims& d) {
    detail::require(lambda_f >= 0.0, "F eigenvalue must be >= 0");
    const double n = static_cast<double>(d.n());
    const double n1 = static_cast<double>(d.n1());
    const double n2 = static_cast<double>(d.n2());
    detail::require(n2 > n, "shifted transform needs n2 > n");
    const double s = std::sqrt(n * (n2 - n));
    const double r = n1 / n2;
    return 2.0 * (n1 - n) / (n1 + n2) * (r * (n2 - s) * lambda_f - (n1 + s)) / (s * (1.0 + r * lambda_f));
}

std::string_view to_string(FTransform t) {
    switch (t) {
        case FTransform::none: return "none";
        case FTransform::semicircle: return "thm42";
        case FTransform::hard_edge: return "thm43";
        case FTransform::shifted: return "thm44";
    }
    return "none";
}

FTransform parse_f_transform(std::string_view name) {
    for (FTransform t : {FTransform::none, FTransform::semicircle, FTransform::hard_edge, FTransform::shifted})
        if (to_string(t) == name) return t;
    throw ParameterError("unknown transform '" + std::string(name) + "' (expected none, thm42, thm43, thm44)");
}

double apply_f_transform(FTransform t, double lambda_f, const FDims& d) {
    switch (t) {
        case FTransform::none: return lambda_f;
        case FTransform::semicircle: return semicircle_f_transform(lambda_f, d);
        case FTransform::hard_edge: return hard_edge_f_transform(lambda_f, d);
        case FTransform::shifted: return shifted_f_transform(lambda_f, d);
    }
    return lambda_f;
}

std::string_view to_string(FRoute r) { return r == FRoute::direct ? "direct" : "tridiag"; }

FRoute parse_f_route(std::string_view name) {
    if (name == "direct") return FRoute::direct;
    if (name == "tridiag") return FRoute::tridiag;
    throw ParameterError("unknown route '" + std::string(name) + "' (expected direct or tridiag)");
}

std::vector<Spectrum> sample_f_spectra(const FDims& d, FRoute route, FTransform transform,
                                       const MonteCarloOptions& opts) {
    detail::require(opts.trials >= 1, "trials must be >= 1");
    if (route == FRoute::direct) check_dense(d);
    const unsigned threads = resolve_threads(opts.threads);
    const unsigned inner = opts.trials == 1 ? threads : 1;
    std::vector<std::vector<double>> values(opts.trials);
    parallel_for(opts.trials, threads, [&](std::size_t t) {
        RngStream rng(opts.seed, t);
        Spectrum s = route == FRoute::direct ? f_eigs_direct(sample_gaussian_pair(d, rng), d)
                                             : f_eigs_tridiag(d, rng, inner);
        std::vector<double> v = std::move(s).take();
        for (double& x : v) x = apply_f_transform(transform, x, d);
        values[t] = std::move(v);
    });
    std::vector<Spectrum> out;
    out.reserve(opts.trials);
    for (auto& v : values) out.emplace_back(std::move(v), Provenance::transformed);
    return out;
}

}  // namespace jacobi
