#pragma once

#include <functional>

namespace jacobi {

struct QuadratureOptions {
    double abs_tol = 1e-8;
    int max_depth = 40;
};

/// Adaptive Simpson with Richardson correction over [a, b]. The interval is
/// first cut into a few panels, each refined by bisection. Throws
/// NumericalError if some panel still misses its tolerance at max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, QuadratureOptions opts = {});

/// Integrand on [lo, hi] given as f(x - lo, hi - x). Passing both offsets
/// lets edge factors such as sqrt(hi - x) stay accurate where x itself can
/// no longer resolve the distance to the edge.
using EdgeIntegrand = std::function<double(double lo_offset, double hi_offset)>;

/// ∫_lo^upper f for f supported on [lo, hi] that may blow up like an inverse
/// square root at either endpoint. Each half of [lo, hi] is mapped through
/// x = lo + t² (resp. x = hi - t²), which cancels such singularities and also
/// smooths square-root zeros, then handed to adaptive_simpson.
double integrate_support(const EdgeIntegrand& f, double lo, double hi, double upper, QuadratureOptions opts = {});

}  // namespace jacobi
