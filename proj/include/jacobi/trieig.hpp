#pragma once

#include "jacobi/matrix.hpp"

namespace jacobi {

/// Largest matrix the dense rotation solver accepts.
inline constexpr std::size_t kDenseLimit = 500;

/// All eigenvalues of a symmetric tridiagonal matrix by Sturm-count bisection
/// on the Gershgorin enclosure. Each eigenvalue is located to within
/// rel_tol * ||T||_inf + 1e-30. The result is independent of `threads`.
Spectrum eig_tridiag(const SymTridiag& t, double rel_tol = 1e-14, unsigned threads = 1);

/// Number of eigenvalues of t strictly below x.
std::size_t sturm_count(const SymTridiag& t, double x);

/// det(x I - T) by the leading-minor three-term recurrence. No rescaling:
/// throws NumericalError when the value leaves the double range.
double charpoly_eval(const SymTridiag& t, double x);

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations until the
/// off-diagonal Frobenius mass drops below tol * ||A||_F. Limited to
/// kDenseLimit rows.
Spectrum eig_dense_sym(const DenseSym& a, double tol = 1e-14);

/// Lower-triangular L with L Lᵀ = A. Throws DegenerateSampleError on a
/// nonpositive pivot.
Matrix cholesky(const DenseSym& a);

/// Eigenvalues of the pencil A v = λ B v, B positive definite, via
/// L⁻¹ A L⁻ᵀ with B = L Lᵀ.
Spectrum eig_generalized_sym(const DenseSym& a, const DenseSym& b, double tol = 1e-14);

}  // namespace jacobi
