#pragma once

#include <cstddef>
#include <vector>

#include "jacobi/betarand.hpp"
#include "jacobi/matrix.hpp"
#include "jacobi/rng.hpp"

namespace jacobi {

/// Parameters (n, a, b, β) of the β-Jacobi ensemble on (-2, 2) with weight
/// (2 - λ)^a (2 + λ)^b. Requires n >= 1, a > -1, b > -1, β > 0.
class JacobiParams {
public:
    JacobiParams(std::size_t n, double a, double b, double beta);

    /// Builds parameters from the effective exponents ã = (2a+2)/β and
    /// b̃ = (2b+2)/β, both of which must be positive.
    static JacobiParams from_tilde(std::size_t n, double a_tilde, double b_tilde, double beta);

    std::size_t n() const { return n_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double beta() const { return beta_; }
    double a_tilde() const { return (2.0 * a_ + 2.0) / beta_; }
    double b_tilde() const { return (2.0 * b_ + 2.0) / beta_; }

    JacobiParams swapped() const { return JacobiParams(n_, b_, a_, beta_); }

private:
    std::size_t n_;
    double a_;
    double b_;
    double beta_;
};

/// The 2n - 1 independent variates α_0 … α_{2n-2} in (-1, 1). Reads outside
/// that range follow the boundary convention α_{-2} = α_{-1} = α_{2n-1} = -1.
class AlphaVector {
public:
    AlphaVector(std::size_t n, std::vector<double> values);

    std::size_t n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    /// α_k for k in [-2, 2n - 1].
    double at(long k) const;

private:
    std::size_t n_;
    std::vector<double> values_;
};

/// Shapes of the k-th variate. Even k: ((2n-k-2)β/4 + a + 1, (2n-k-2)β/4 + b + 1);
/// odd k: ((2n-k-3)β/4 + a + b + 2, (2n-k-1)β/4). Throws std::out_of_range
/// for k outside [0, 2n - 2].
BetaParams alpha_shape_params(const JacobiParams& p, std::size_t k);

AlphaVector sample_alphas(const JacobiParams& p, RngStream& rng);

/// AlphaVector filled with the exact means of each variate.
AlphaVector mean_alphas(const JacobiParams& p);

/// Random tridiagonal model with diagonal
///   b_{k+1} = (1 - α_{2k-1}) α_{2k} - (1 + α_{2k-1}) α_{2k-2}
/// and off-diagonal
///   a_{k+1} = sqrt((1 - α_{2k-1}) (1 - α_{2k}²) (1 + α_{2k+1})).
/// Its eigenvalues follow the β-Jacobi law.
SymTridiag build_random_tridiag(const AlphaVector& alphas);

/// Deterministic companion matrix obtained by replacing every α by its mean,
/// in reversed row/column order, written in closed form through (ã, b̃).
/// Its eigenvalues are the roots of P_n^{(ã-1, b̃-1)}(x/2).
SymTridiag build_mean_tridiag(const JacobiParams& p);
SymTridiag build_mean_tridiag(std::size_t n, double a_tilde, double b_tilde);

/// Convenience: sample α's, build the random matrix and return its spectrum.
Spectrum sample_spectrum(const JacobiParams& p, RngStream& rng, unsigned threads = 1);

}  // namespace jacobi
