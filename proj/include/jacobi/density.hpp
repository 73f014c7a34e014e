#pragma once

#include <string>
#include <utility>
#include <variant>

namespace jacobi {

/// Four-parameter family arising from limits of the recurrence coefficients:
///   f(x) = b1/(2π) sqrt(4 b2 - (x - a2)²) / Q(x),
///   Q(x) = (b2 - b1) x² + (b1 a2 + b1 a1 - 2 b2 a1) x + b2 a1² - a1 a2 b1 + b1²,
/// supported on |x - a2| <= 2 sqrt(b2).
struct GeneralLimit {
    double a1;
    double a2;
    double b1;
    double b2;
    GeneralLimit(double a1, double a2, double b1, double b2);
};

/// Limit when ã/n → α0 and b̃/n → β0:
///   f(x) = (2 + α0 + β0)/(2π) sqrt((2 r2 - x)(x - 2 r1)) / (4 - x²) on (2 r1, 2 r2).
struct ProportionalLimit {
    double alpha0;
    double beta0;
    ProportionalLimit(double alpha0, double beta0);
};

/// 1 / (π sqrt(4 - x²)) on (-2, 2).
struct Arcsine {};

/// 2 / (π σ²) sqrt(σ² - x²) on [-σ, σ].
struct Semicircle {
    double sigma;
    explicit Semicircle(double sigma);
    /// σ = 4 γ / (1 + γ)^{3/2} for exponent ratio γ = lim ã / b̃.
    static Semicircle from_ratio(double gamma);
};

/// Hard-edge limit when ã/n → ∞ and b̃/n → β0:
///   (1/4π) sqrt((s2 - x)(x - s1)) / x on [s1, s2], s1,2 = 2(2 + β0) ∓ 4 sqrt(1 + β0).
struct HardEdgeLimit {
    double beta0;
    explicit HardEdgeLimit(double beta0);
};

/// (1/8π) sqrt((6 - x)(x + 2)) on [-2, 6].
struct ShiftedSemicircle {};

/// Limit of the F-matrix spectrum for n/n1 → y ∈ (0,1], n/n2 → y' ∈ (0,1):
///   (1 - y') / (2π x (x y' + y)) sqrt((x - s1)(s2 - x)) on (s1, s2),
///   s1,2 = ((1 ∓ sqrt(1 - (1-y)(1-y'))) / (1 - y'))².
struct FLimit {
    double y;
    double yprime;
    FLimit(double y, double yprime);
};

/// Law of 1/X for X ~ HardEdgeLimit(1/y' - 1):
///   (1/4π) sqrt((x s2 - 1)(1 - x s1)) / x² on (1/s2, 1/s1),
///   s1,2 = 2(1/y' + 1) ∓ 4 sqrt(1/y'). Requires y' ∈ (0, 1).
struct ReciprocalHardEdgeLimit {
    double yprime;
    explicit ReciprocalHardEdgeLimit(double yprime);
};

/// (1/8π) sqrt((6 + x)(2 - x)) on [-6, 2]; ShiftedSemicircle mirrored.
struct MirroredShiftedSemicircle {};

using DensityModel = std::variant<GeneralLimit, ProportionalLimit, Arcsine, Semicircle, HardEdgeLimit,
                                  ShiftedSemicircle, FLimit, ReciprocalHardEdgeLimit, MirroredShiftedSemicircle>;

struct Support {
    double lo;
    double hi;
};

Support support(const DensityModel& m);

/// Density value; zero outside the open support and at its endpoints.
double density_eval(const DensityModel& m, double x);

/// ∫_{lo}^{ξ} density by adaptive Simpson (absolute tolerance 1e-8), clamped
/// to [0, 1].
double cdf_eval(const DensityModel& m, double xi);

std::string model_name(const DensityModel& m);

/// Support endpoints (2 r1, 2 r2) of ProportionalLimit(α0, β0).
std::pair<double, double> proportional_support(double alpha0, double beta0);

/// Support endpoints (s1, s2) of HardEdgeLimit(β0).
std::pair<double, double> hard_edge_support(double beta0);

/// Support endpoints (s1, s2) of FLimit(y, y').
std::pair<double, double> f_limit_support(double y, double yprime);

}  // namespace jacobi
