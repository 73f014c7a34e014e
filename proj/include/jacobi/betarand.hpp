#pragma once

#include "jacobi/rng.hpp"

namespace jacobi {

/// Shape pair of a beta law. Both shapes must be strictly positive.
struct BetaParams {
    double p;
    double q;

    BetaParams(double p, double q);
};

/// Standard normal variate (Marsaglia polar method).
double sample_normal(RngStream& rng);

/// Gamma(shape, 1) variate via the Marsaglia–Tsang squeeze on a cubed normal;
/// shapes below one are boosted to shape + 1 and multiplied by U^(1/shape).
/// Extremely small shapes can underflow double; the result is then clamped
/// to the smallest positive subnormal so it stays strictly positive.
double sample_gamma(double shape, RngStream& rng);

/// log of a Gamma(shape, 1) variate, free of underflow for tiny shapes.
double sample_log_gamma(double shape, RngStream& rng);

/// Beta(p, q) on (0,1) as the ratio X / (X + Y) of independent gammas.
double sample_beta01(const BetaParams& params, RngStream& rng);

/// Beta(p, q) on (-1,1) with density proportional to (1-x)^(p-1) (1+x)^(q-1).
///
/// Orientation matters: the variate is 1 - 2 Z with Z ~ Beta01(p, q), NOT
/// 2 Z - 1. Flipping it mirrors every sampled spectrum. Computed as
/// tanh((log Y - log X) / 2), which equals (Y - X) / (X + Y).
double sample_beta_pm1(const BetaParams& params, RngStream& rng);

/// Mean of sample_beta_pm1: (q - p) / (p + q).
double beta_mean_pm1(const BetaParams& params);

/// Tail bound 4 exp(c (p + q)) for P(|Z - E Z| > delta), Z ~ Beta01(p, q),
/// with c = log(1 + d) - d and d = delta / (3 + 2 delta).
double beta_concentration_bound(const BetaParams& params, double delta);

/// The exponent constant c of beta_concentration_bound; strictly negative
/// for delta > 0.
double beta_concentration_exponent(double delta);

}  // namespace jacobi
