#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "jacobi/ensemble.hpp"
#include "jacobi/matrix.hpp"
#include "jacobi/rng.hpp"
#include "jacobi/spectra.hpp"

namespace jacobi {

/// Dimensions of the F-matrix (X Xᵀ / n1)(Y Yᵀ / n2)⁻¹ with X n x n1 and
/// Y n x n2. Requires n >= 1, n1 >= n and n2 >= n.
class FDims {
public:
    FDims(std::size_t n, std::size_t n1, std::size_t n2);

    std::size_t n() const { return n_; }
    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }

    /// n2 / n1, the fixed point of the Jacobi/F correspondence.
    double ratio() const { return static_cast<double>(n2_) / static_cast<double>(n1_); }

    /// Induced ensemble: a = (n1 - n - 1)/2, b = (n2 - n - 1)/2, β = 1.
    JacobiParams jacobi_params() const;

private:
    std::size_t n_;
    std::size_t n1_;
    std::size_t n2_;
};

struct GaussianPair {
    Matrix x;  // n x n1
    Matrix y;  // n x n2
};

GaussianPair sample_gaussian_pair(const FDims& d, RngStream& rng);

/// Eigenvalues of (X Xᵀ / n1)(Y Yᵀ / n2)⁻¹ from the pencil
/// (X Xᵀ / n1) v = λ (Y Yᵀ / n2) v. Dense; n <= kDenseLimit.
Spectrum f_eigs_direct(const GaussianPair& g, const FDims& d);

/// Eigenvalues of 2 (Y Yᵀ - X Xᵀ)(Y Yᵀ + X Xᵀ)⁻¹, all in (-2, 2), from the
/// pencil 2 (Y Yᵀ - X Xᵀ) v = λ (Y Yᵀ + X Xᵀ) v. Dense; n <= kDenseLimit.
Spectrum a_n_eigs(const GaussianPair& g, const FDims& d);

/// λ^F = r (2 - λ^J) / (2 + λ^J) with r = n2 / n1. Requires λ^J > -2 (the
/// pole). Values a rounding error above 2 map to 0.
double jacobi_to_f(double lambda_j, const FDims& d);

/// λ^J = 2 (r - λ^F) / (r + λ^F). Requires λ^F >= 0.
double f_to_jacobi(double lambda_f, const FDims& d);

/// F spectrum through the tridiagonal β = 1 ensemble and jacobi_to_f.
/// O(n) memory.
Spectrum f_eigs_tridiag(const FDims& d, RngStream& rng, unsigned threads = 1);

/// 2 sqrt(n1/n - 1) ((n2 - n)/(n1 + n2 - 2n) - n2/(n1 λ + n2)); semicircle
/// limit when n1, n2 grow faster than n at a fixed ratio.
double semicircle_f_transform(double lambda_f, const FDims& d);

/// n / (2 (n1 - n)) (λ n1 / n2 + 1); hard-edge type limit when n/n2
/// stays bounded away from zero.
double hard_edge_f_transform(double lambda_f, const FDims& d);

/// 2 (n1 - n)/(n1 + n2) · ((n1/n2)(n2 - s) λ - (n1 + s)) / (s (1 + (n1/n2) λ)),
/// s = sqrt(n (n2 - n)); limit supported on [-6, 2] when n1/n2 → ∞.
double shifted_f_transform(double lambda_f, const FDims& d);

enum class FTransform { none, semicircle, hard_edge, shifted };

/// External names: "none", "thm42", "thm43", "thm44".
std::string_view to_string(FTransform t);
FTransform parse_f_transform(std::string_view name);

double apply_f_transform(FTransform t, double lambda_f, const FDims& d);

enum class FRoute { direct, tridiag };

std::string_view to_string(FRoute r);
FRoute parse_f_route(std::string_view name);

/// One F spectrum per trial (trial t uses stream t), optionally transformed.
/// Transformed spectra are re-sorted.
std::vector<Spectrum> sample_f_spectra(const FDims& d, FRoute route, FTransform transform,
                                       const MonteCarloOptions& opts);

}  // namespace jacobi
