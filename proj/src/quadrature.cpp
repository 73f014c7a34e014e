#include "jacobi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {
namespace {

struct Simpson {
    const std::function<double(double)>& f;
    int max_depth;
    bool failed = false;

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        if (!std::isfinite(flm) || !std::isfinite(frm)) {
            failed = true;
            return 0.0;
        }
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double diff = left + right - whole;
        if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
        if (depth >= max_depth || failed) {
            failed = true;
            return left + right + diff / 15.0;
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, QuadratureOptions opts) {
    if (b == a) return 0.0;
    if (b < a) return -adaptive_simpson(f, b, a, opts);
    constexpr int kPanels = 8;
    Simpson s{f, opts.max_depth};
    const double h = (b - a) / kPanels;
    double total = 0.0;
    double f_left = f(a);
    for (int i = 0; i < kPanels; ++i) {
        const double pa = a + i * h;
        const double pb = (i + 1 == kPanels) ? b : a + (i + 1) * h;
        const double pm = 0.5 * (pa + pb);
        const double fm = f(pm);
        const double fb = f(pb);
        if (!std::isfinite(f_left) || !std::isfinite(fm) || !std::isfinite(fb)) s.failed = true;
        if (s.failed) break;
        const double whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
        total += s.refine(pa, pb, f_left, fm, fb, whole, opts.abs_tol / kPanels, 0);
        f_left = fb;
    }
    if (s.failed || !std::isfinite(total))
        throw NumericalError("adaptive Simpson did not converge on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return total;
}

double integrate_support(const EdgeIntegrand& f, double lo, double hi, double upper, QuadratureOptions opts) {
    if (upper <= lo) return 0.0;
    upper = std::min(upper, hi);
    const double width = hi - lo;
    const double mid = 0.5 * (lo + hi);
    const QuadratureOptions half{0.5 * opts.abs_tol, opts.max_depth};

    // After substitution the integrand is continuous at t = 0 but f itself may
    // be infinite there, so t = 0 is replaced by a point just inside.
    auto from_lo = [&](double t) {
        const double tt = t == 0.0 ? 1e-12 * std::sqrt(mid - lo) : t;
        const double d = tt * tt;
        return f(d, width - d) * 2.0 * tt;
    };
    auto from_hi = [&](double t) {
        const double tt = t == 0.0 ? 1e-12 * std::sqrt(hi - mid) : t;
        const double d = tt * tt;
        return f(width - d, d) * 2.0 * tt;
    };

    if (upper <= mid) return adaptive_simpson(from_lo, 0.0, std::sqrt(upper - lo), half);
    const double left = adaptive_simpson(from_lo, 0.0, std::sqrt(mid - lo), half);
    const double right = adaptive_simpson(from_hi, std::sqrt(std::max(0.0, hi - upper)), std::sqrt(hi - mid), half);
    return left + right;
}

}  // namespace jacobi
