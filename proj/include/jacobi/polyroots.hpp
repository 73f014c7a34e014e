#pragma once

#include <cstddef>

#include "jacobi/matrix.hpp"

namespace jacobi {

/// Degree and exponents of P_n^{(γ,δ)}, orthogonal on [-1, 1] for the weight
/// (1-x)^γ (1+x)^δ. Requires γ > -1 and δ > -1.
struct JacobiPolyParams {
    std::size_t degree;
    double gamma;
    double delta;

    JacobiPolyParams(std::size_t degree, double gamma, double delta);
};

/// Rising factorial a (a+1) … (a+n-1).
double pochhammer(double a, std::size_t n);

/// P_n^{(γ,δ)}(x) with leading coefficient (n+γ+δ+1)_n / (2^n n!), by the
/// three-term recurrence in the degree.
double jacobi_eval(const JacobiPolyParams& p, double x);

/// 2^n n! / (n+γ+δ+1)_n, the factor turning P_n into its monic form.
double monic_factor(const JacobiPolyParams& p);

/// Recurrence coefficients of the monic family on [-1, 1]:
/// x p_k = p_{k+1} + shift(k) p_k + product(k) p_{k-1}.
double monic_shift(double gamma, double delta, std::size_t k);
double monic_product(double gamma, double delta, std::size_t k);

/// Symmetric tridiagonal matrix whose eigenvalues are the roots of
/// P_n^{(γ,δ)}(x/2), i.e. the Golub–Welsch matrix scaled to [-2, 2].
SymTridiag jacobi_recurrence_matrix(const JacobiPolyParams& p);

/// Ascending roots of P_n^{(γ,δ)}(x/2), all inside (-2, 2).
Spectrum jacobi_roots_scaled(const JacobiPolyParams& p, unsigned threads = 1);

/// |(n+δ-1) P_{n-2}^{(γ,δ)} - (n+γ+δ-1) P_{n-1}^{(γ,δ)} + (2n+γ+δ-2) P_{n-1}^{(γ-1,δ)}| at x.
/// Zero identically; requires n >= 2 and γ > 0.
double identity_residual_degree_step(const JacobiPolyParams& p, double x);

/// |(n+γ-1) P_{n-1}^{(γ-1,δ)} - (2n+γ+δ-1) P_n^{(γ-1,δ-1)} + (n+γ+δ-1) P_n^{(γ-1,δ)}| at x.
/// Zero identically; requires n >= 1, γ > 0 and δ > 0.
double identity_residual_parameter_step(const JacobiPolyParams& p, double x);

/// Sum of the absolute values of the three terms in each identity, used to
/// turn the residuals into relative errors.
double identity_scale_degree_step(const JacobiPolyParams& p, double x);
double identity_scale_parameter_step(const JacobiPolyParams& p, double x);

}  // namespace jacobi
