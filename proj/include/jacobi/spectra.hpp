#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jacobi/ensemble.hpp"
#include "jacobi/matrix.hpp"
#include "jacobi/rng.hpp"

namespace jacobi {

/// Empirical distribution function of a sample; right-continuous.
class Ecdf {
public:
    explicit Ecdf(std::vector<double> sample);
    explicit Ecdf(const Spectrum& s);

    /// Fraction of sample points <= xi.
    double operator()(double xi) const;
    /// Fraction of sample points < xi (left limit).
    double left_limit(double xi) const;

    std::span<const double> points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<double> points_;
};

double ecdf_eval(const Ecdf& e, double xi);

/// Kolmogorov–Smirnov distance sup |F_e - F| against a continuous CDF.
double ks_distance(const Ecdf& e, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov–Smirnov distance sup |F_e - F_f|.
double ks_two_sample(const Ecdf& e, const Ecdf& f);

/// Lévy distance inf{ε > 0 : F(x-ε) - ε <= G(x) <= F(x+ε) + ε for all x}
/// between two empirical distributions, bisected on ε to ~1e-15.
double levy_distance(const Ecdf& e, const Ecdf& f);

/// Affine rescaling sequence (δ_n, ε_n) at a given n.
struct ScalingSequence {
    double delta;
    double epsilon;
    std::size_t n;
    ScalingSequence(double delta, double epsilon, std::size_t n);
};

/// How a ScalingSequence is applied to an eigenvalue λ.
enum class ScalingConvention {
    none,        // λ
    shift,       // (λ - ε) / δ
    recurrence,  // (λ - 2(2ε - 1)) / (2δ)
};

double apply_scaling(double lambda, const ScalingSequence& s, ScalingConvention c);

/// The equivalent sequence under the other convention, so that
/// apply_scaling(λ, s, recurrence) == apply_scaling(λ, to_shift_form(s), shift).
ScalingSequence to_shift_form(const ScalingSequence& recurrence_form);

/// Per-realization comparison of sampled eigenvalues with the polynomial roots.
struct DeviationReport {
    double max_dev;             // max_j |λ_j - x_j|, ascending pairing
    double alpha_deviation;     // max_k |α_k - E α_k|
    double perturbation_bound;  // 4 sqrt(3 X) + 6 X with X = alpha_deviation
    double scaled_dev;          // max_dev ((a + b) / log n)^{1/4}
};

/// Samples one realization and compares it with the precomputed `roots`
/// (ascending roots of P_n^{(ã-1, b̃-1)}(x/2)).
DeviationReport deviation_report(const JacobiParams& p, const Spectrum& roots, RngStream& rng);
DeviationReport deviation_report(const JacobiParams& p, RngStream& rng);

/// 4 (2n - 1) exp(c(ε) (a + b + 2)), c(ε) = log(1 + u) - u, u = ε² / (648 + 2ε²):
/// bound on P(max_j |λ_j - x_j| > ε) for ε ∈ (0, 1].
double deviation_tail_bound(std::size_t n, double a, double b, double epsilon);
double deviation_tail_exponent(double epsilon);

/// Finite-n values of the four recurrence-limit expressions, multiplied out
/// so they estimate (a1, a2, b1, b2) of GeneralLimit.
struct LimitParams {
    double a1;
    double a2;
    double b1;
    double b2;
};
LimitParams limit_params_at_n(const JacobiParams& p, const ScalingSequence& s);
LimitParams limit_params_at_n(std::size_t n, double a_tilde, double b_tilde, const ScalingSequence& s);

struct MonteCarloOptions {
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Spectra of `trials` independent realizations; trial t uses stream t.
std::vector<Spectrum> sample_spectra(const JacobiParams& p, const MonteCarloOptions& opts);

/// Pooled, rescaled eigenvalues of all trials as one ECDF. Identical for any
/// thread count.
Ecdf monte_carlo_esd(const JacobiParams& p, const ScalingSequence& s, ScalingConvention convention,
                     const MonteCarloOptions& opts);

/// Empirical q-quantile (linear interpolation) of an unsorted sample.
double quantile(std::vector<double> values, double q);

}  // namespace jacobi
