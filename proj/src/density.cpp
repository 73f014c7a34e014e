#include "jacobi/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/quadrature.hpp"

namespace jacobi {

using std::numbers::pi;

GeneralLimit::GeneralLimit(double a1_, double a2_, double b1_, double b2_) : a1(a1_), a2(a2_), b1(b1_), b2(b2_) {
    detail::require(b1 > 0.0 && b2 > 0.0, "general limit needs b1 > 0 and b2 > 0");
}

ProportionalLimit::ProportionalLimit(double a0, double b0) : alpha0(a0), beta0(b0) {
    detail::require(a0 >= 0.0 && b0 >= 0.0, "proportional limit needs alpha0, beta0 >= 0");
}

Semicircle::Semicircle(double s) : sigma(s) { detail::require(s > 0.0, "semicircle radius must be > 0"); }

Semicircle Semicircle::from_ratio(double gamma) {
    detail::require(gamma > 0.0, "exponent ratio must be > 0");
    return Semicircle(4.0 * gamma / std::pow(1.0 + gamma, 1.5));
}

HardEdgeLimit::HardEdgeLimit(double b0) : beta0(b0) { detail::require(b0 >= 0.0, "hard-edge limit needs beta0 >= 0"); }

FLimit::FLimit(double y_, double yp) : y(y_), yprime(yp) {
    detail::require(y > 0.0 && y <= 1.0, "F limit needs y in (0, 1]");
    detail::require(yp > 0.0 && yp < 1.0, "F limit needs y' in (0, 1)");
}

ReciprocalHardEdgeLimit::ReciprocalHardEdgeLimit(double yp) : yprime(yp) {
    detail::require(yp > 0.0 && yp < 1.0, "reciprocal hard-edge limit needs y' in (0, 1)");
}

std::pair<double, double> proportional_support(double a0, double b0) {
    const double root = 4.0 * std::sqrt((a0 + 1.0) * (b0 + 1.0) * (a0 + b0 + 1.0));
    const double denom = (2.0 + a0 + b0) * (2.0 + a0 + b0);
    const double diff = (b0 - a0) * (b0 + a0);
    // The support reaches ±2 exactly when the matching exponent ratio is zero.
    const double lo = b0 == 0.0 ? -2.0 : 2.0 * (diff - root) / denom;
    const double hi = a0 == 0.0 ? 2.0 : 2.0 * (diff + root) / denom;
    return {lo, hi};
}

std::pair<double, double> hard_edge_support(double b0) {
    const double c = 2.0 * (2.0 + b0);
    const double r = 4.0 * std::sqrt(1.0 + b0);
    return {c - r, c + r};
}

std::pair<double, double> f_limit_support(double y, double yp) {
    const double root = std::sqrt(1.0 - (1.0 - y) * (1.0 - yp));
    const double lo = (1.0 - root) / (1.0 - yp);
    const double hi = (1.0 + root) / (1.0 - yp);
    return {lo * lo, hi * hi};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};


}  // namespace

Support support(const DensityModel& m) {
    return std::visit(
        overloaded{
            [](const GeneralLimit& g) {
                const double r = 2.0 * std::sqrt(g.b2);
                return Support{g.a2 - r, g.a2 + r};
            },
            [](const ProportionalLimit& p) {
                auto [lo, hi] = proportional_support(p.alpha0, p.beta0);
                return Support{lo, hi};
            },
            [](const Arcsine&) { return Support{-2.0, 2.0}; },
            [](const Semicircle& s) { return Support{-s.sigma, s.sigma}; },
            [](const HardEdgeLimit& h) {
                auto [lo, hi] = hard_edge_support(h.beta0);
                return Support{lo, hi};
            },
            [](const ShiftedSemicircle&) { return Support{-2.0, 6.0}; },
            [](const FLimit& f) {
                auto [lo, hi] = f_limit_support(f.y, f.yprime);
                return Support{lo, hi};
            },
            [](const ReciprocalHardEdgeLimit& r) {
                auto [s1, s2] = hard_edge_support(1.0 / r.yprime - 1.0);
                return Support{1.0 / s2, 1.0 / s1};
            },
            [](const MirroredShiftedSemicircle&) { return Support{-6.0, 2.0}; },
        },
        m);
}

namespace {

// Density at x = lo + dlo = hi - dhi, with both offsets exact.
double density_at(const DensityModel& m, const Support& s, double dlo, double dhi) {
    if (!(dlo > 0.0 && dhi > 0.0)) return 0.0;
    const double x = dlo <= dhi ? s.lo + dlo : s.hi - dhi;
    const double root = std::sqrt(dlo * dhi);
    return std::visit(
        overloaded{
            [&](const GeneralLimit& g) {
                const double q = (g.b2 - g.b1) * x * x + (g.b1 * g.a2 + g.b1 * g.a1 - 2.0 * g.b2 * g.a1) * x +
                                 g.b2 * g.a1 * g.a1 - g.a1 * g.a2 * g.b1 + g.b1 * g.b1;
                return g.b1 / (2.0 * pi) * root / q;
            },
            [&](const ProportionalLimit& p) {
                const double to_right = dhi + std::max(0.0, 2.0 - s.hi);
                const double to_left = dlo + std::max(0.0, s.lo + 2.0);
                return (2.0 + p.alpha0 + p.beta0) / (2.0 * pi) * root / (to_right * to_left);
            },
            [&](const Arcsine&) { return 1.0 / (pi * root); },
            [&](const Semicircle& c) { return 2.0 / (pi * c.sigma * c.sigma) * root; },
            [&](const HardEdgeLimit&) { return root / (4.0 * pi * x); },
            [&](const ShiftedSemicircle&) { return root / (8.0 * pi); },
            [&](const FLimit& f) { return (1.0 - f.yprime) / (2.0 * pi * x * (x * f.yprime + f.y)) * root; },
            [&](const ReciprocalHardEdgeLimit& r) {
                // (x s2 - 1)(1 - x s1) = s1 s2 (x - 1/s2)(1/s1 - x)
                auto [s1, s2] = hard_edge_support(1.0 / r.yprime - 1.0);
                return std::sqrt(s1 * s2) * root / (4.0 * pi * x * x);
            },
            [&](const MirroredShiftedSemicircle&) { return root / (8.0 * pi); },
        },
        m);
}

}  // namespace

double density_eval(const DensityModel& m, double x) {
    const Support s = support(m);
    if (!(x > s.lo && x < s.hi)) return 0.0;
    return density_at(m, s, x - s.lo, s.hi - x);
}

double cdf_eval(const DensityModel& m, double xi) {
    const Support s = support(m);
    if (xi <= s.lo) return 0.0;
    auto f = [&](double dlo, double dhi) { return density_at(m, s, dlo, dhi); };
    const double value = integrate_support(f, s.lo, s.hi, xi, {1e-8, 40});
    return std::clamp(value, 0.0, 1.0);
}

std::string model_name(const DensityModel& m) {
    return std::visit(overloaded{
                          [](const GeneralLimit&) { return std::string("general"); },
                          [](const ProportionalLimit&) { return std::string("proportional"); },
                          [](const Arcsine&) { return std::string("arcsine"); },
                          [](const Semicircle&) { return std::string("semicircle"); },
                          [](const HardEdgeLimit&) { return std::string("hard-edge"); },
                          [](const ShiftedSemicircle&) { return std::string("shifted-semicircle"); },
                          [](const FLimit&) { return std::string("f-limit"); },
                          [](const ReciprocalHardEdgeLimit&) { return std::string("reciprocal-hard-edge"); },
                          [](const MirroredShiftedSemicircle&) { return std::string("mirrored-shifted-semicircle"); },
                      },
                      m);
}

}  // namespace jacobi
