#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "jacobi/density.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/quadrature.hpp"
#include "oracles.hpp"

using namespace jacobi;
using std::numbers::pi;

namespace {

std::vector<DensityModel> all_models() {
    return {GeneralLimit(0, 0, 0.5, 7.0 / 16), GeneralLimit(0.3, -0.2, 0.4, 0.6), ProportionalLimit(3, 3),
            ProportionalLimit(0, 2.5), ProportionalLimit(1.5, 0), ProportionalLimit(0, 0), Arcsine{},
            Semicircle(std::sqrt(2.0)), Semicircle::from_ratio(0.5), HardEdgeLimit(0), HardEdgeLimit(1.0),
            ShiftedSemicircle{}, FLimit(0.5, 1.0 / 3), FLimit(1.0, 0.5), ReciprocalHardEdgeLimit(0.5),
            MirroredShiftedSemicircle{}};
}

}  // namespace

TEST_CASE("density point values") {
    CHECK(density_eval(ProportionalLimit(3, 3), 0.0) == doctest::Approx(std::sqrt(7.0) / (2 * pi)));
    CHECK(density_eval(Arcsine{}, 0.0) == doctest::Approx(1 / (2 * pi)));
    CHECK(density_eval(FLimit(0.5, 0.5), 1.0) == doctest::Approx(std::sqrt(3.0) / (2 * pi)));
    CHECK(density_eval(Semicircle(std::sqrt(2.0)), 0.0) == doctest::Approx(std::sqrt(2.0) / pi));
    CHECK(density_eval(ShiftedSemicircle{}, 2.0) == doctest::Approx(4 / (8 * pi)));
    CHECK(Semicircle::from_ratio(1.0).sigma == doctest::Approx(std::sqrt(2.0)));
    for (const DensityModel& m : all_models()) {
        const Support s = support(m);
        CAPTURE(model_name(m));
        CHECK(s.lo < s.hi);
        CHECK(density_eval(m, s.lo - 0.1) == 0.0);
        CHECK(density_eval(m, s.hi + 0.1) == 0.0);
        CHECK(density_eval(m, s.lo) == 0.0);
        CHECK(density_eval(m, s.hi) == 0.0);
        CHECK(density_eval(m, 0.5 * (s.lo + s.hi)) > 0.0);
    }
}

TEST_CASE("every density integrates to one") {
    for (const DensityModel& m : all_models()) {
        const Support s = support(m);
        CAPTURE(model_name(m));
        CHECK(cdf_eval(m, s.hi) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(cdf_eval(m, s.lo) == 0.0);
        // Independent of the library quadrature: fine midpoint rule after x = lo + (hi-lo) sin²(θ).
        const int k = 200000;
        double total = 0;
        for (int i = 0; i < k; ++i) {
            const double th = (i + 0.5) / k * pi / 2;
            const double x = s.lo + (s.hi - s.lo) * std::sin(th) * std::sin(th);
            total += density_eval(m, x) * (s.hi - s.lo) * std::sin(2 * th) * (pi / 2) / k;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("arcsine cdf against the closed form") {
    for (double x = -1.999; x < 2.0; x += 0.0373) CHECK(std::abs(cdf_eval(Arcsine{}, x) - oracle::arcsine_cdf(x)) < 1e-7);
    CHECK(std::abs(cdf_eval(Arcsine{}, -2 + 1e-12) - oracle::arcsine_cdf(-2 + 1e-12)) < 1e-7);
}

TEST_CASE("cdf is monotone") {
    for (const DensityModel& m : all_models()) {
        const Support s = support(m);
        double prev = 0;
        for (int i = 0; i <= 50; ++i) {
            const double v = cdf_eval(m, s.lo + (s.hi - s.lo) * i / 50);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("support formulas") {
    auto [lo, hi] = proportional_support(3, 3);
    CHECK(lo == doctest::Approx(-std::sqrt(7.0) / 2));
    CHECK(hi == doctest::Approx(std::sqrt(7.0) / 2));
    auto [l0, h0] = proportional_support(0, 0);
    CHECK(l0 == -2.0);
    CHECK(h0 == 2.0);
    auto [la, ha] = proportional_support(4.2, 4.2);
    CHECK(la == doctest::Approx(-ha));

    auto [s1, s2] = hard_edge_support(0.0);
    CHECK(s1 == doctest::Approx(0.0).scale(1.0));
    CHECK(s2 == doctest::Approx(8.0));
    auto [f1, f2] = f_limit_support(0.5, 0.5);
    CHECK(f1 == doctest::Approx(7 - 4 * std::sqrt(3.0)));
    CHECK(f2 == doctest::Approx(7 + 4 * std::sqrt(3.0)));
    auto [g1, g2] = f_limit_support(1.0, 0.4);
    CHECK(g1 == 0.0);
    CHECK(g2 > 0.0);
    auto [k1, k2] = f_limit_support(0.3, 0.6);
    CHECK(0 < k1);
    CHECK(k1 < k2);

    CHECK_THROWS_AS(FLimit(0.0, 0.5), ParameterError);
    CHECK_THROWS_AS(FLimit(0.5, 1.0), ParameterError);
    CHECK_THROWS_AS(Semicircle(0.0), ParameterError);
    CHECK_THROWS_AS(GeneralLimit(0, 0, 0, 1), ParameterError);
}

TEST_CASE("general family reproduces the proportional density") {
    const DensityModel g = GeneralLimit(0, 0, 0.5, 7.0 / 16);
    const Support s = support(ProportionalLimit(3, 3));
    CHECK(support(g).lo == doctest::Approx(s.lo));
    CHECK(support(g).hi == doctest::Approx(s.hi));
    for (int i = 1; i <= 100; ++i) {
        const double x = s.lo + (s.hi - s.lo) * i / 101;
        CHECK(std::abs(density_eval(g, x) - density_eval(ProportionalLimit(3, 3), x)) < 1e-8);
    }
}

TEST_CASE("F-matrix limit is the Moebius image of the proportional limit") {
    // λ^J = 2 (r - x)/(r + x), r = y / y', with exponent ratios (1-y)/y and (1-y')/y'.
    for (auto [y, yp] : {std::pair{0.5, 1.0 / 3}, std::pair{0.8, 0.2}, std::pair{0.3, 0.9}}) {
        const FLimit f(y, yp);
        const ProportionalLimit j((1 - y) / y, (1 - yp) / yp);
        const double r = y / yp;
        const Support s = support(f);
        for (int i = 1; i < 200; ++i) {
            const double x = s.lo + (s.hi - s.lo) * i / 200;
            const double lj = 2 * (r - x) / (r + x);
            const double pushed = density_eval(j, lj) * 4 * r / ((r + x) * (r + x));
            CHECK(std::abs(pushed - density_eval(f, x)) < 1e-6);
        }
    }
}

TEST_CASE("reciprocal and mirrored variants") {
    const double yp = 0.5;
    const ReciprocalHardEdgeLimit rec(yp);
    const HardEdgeLimit hard(1 / yp - 1);
    const Support s = support(rec);
    for (int i = 1; i < 100; ++i) {
        const double x = s.lo + (s.hi - s.lo) * i / 100;
        // As printed: (1/4π) sqrt((x s2 - 1)(1 - x s1)) / x².
        const double s1 = 2 * (1 / yp + 1) - 4 * std::sqrt(1 / yp), s2 = 2 * (1 / yp + 1) + 4 * std::sqrt(1 / yp);
        const double printed = std::sqrt((x * s2 - 1) * (1 - x * s1)) / (4 * pi * x * x);
        CHECK(density_eval(rec, x) == doctest::Approx(printed).epsilon(1e-10));
        CHECK(density_eval(rec, x) == doctest::Approx(density_eval(hard, 1 / x) / (x * x)).epsilon(1e-10));
    }
    for (double x = -5.9; x < 2; x += 0.1) {
        CHECK(density_eval(MirroredShiftedSemicircle{}, x) == doctest::Approx(density_eval(ShiftedSemicircle{}, -x)));
        CHECK(density_eval(MirroredShiftedSemicircle{}, x) ==
              doctest::Approx(std::sqrt((6 + x) * (2 - x)) / (8 * pi)));
    }
}

TEST_CASE("quadrature") {
    CHECK(adaptive_simpson([](double x) { return x * x * x - x; }, -1, 2) == doctest::Approx(2.25));
    CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0, 1) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-9));
    CHECK(adaptive_simpson([](double) { return 1.0; }, 3, 1) == doctest::Approx(-2));
    // ∫_0^1 dx / sqrt(x (1-x)) = π
    const double v = integrate_support([](double dlo, double dhi) { return 1 / std::sqrt(dlo * dhi); }, 0, 1, 1);
    CHECK(v == doctest::Approx(pi).epsilon(1e-8));
    CHECK_THROWS_AS(adaptive_simpson([](double x) { return x > 0.5 ? 1.0 / 0.0 : 0.0; }, 0, 1), NumericalError);
}
