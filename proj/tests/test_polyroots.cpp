#include <doctest.h>

#include <cmath>
#include <vector>

#include "jacobi/ensemble.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/polyroots.hpp"
#include "jacobi/rng.hpp"
#include "jacobi/trieig.hpp"
#include "oracles.hpp"

using namespace jacobi;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == doctest::Approx(120.0));
    CHECK(pochhammer(2.5, 3) == doctest::Approx(39.375));
}

TEST_CASE("jacobi polynomial values") {
    CHECK(jacobi_eval({0, 1.5, 0.5}, 0.3) == 1.0);
    CHECK(jacobi_eval({1, 0, 0}, 0.5) == doctest::Approx(0.5));
    CHECK(std::abs(jacobi_eval({2, 0, 0}, 1.0 / std::sqrt(3.0))) < 1e-15);
    // Degree-one closed form.
    CHECK(jacobi_eval({1, 1.5, -0.5}, 0.2) == doctest::Approx((1.5 - 0.5 + 2) * 0.2 / 2 + (1.5 + 0.5) / 2));

    RngStream rng(1, 0);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(12 * rng.uniform());
        const double g = -0.9 + 6 * rng.uniform(), d = -0.9 + 6 * rng.uniform(), x = 2 * rng.uniform() - 1;
        const double ref = oracle::jacobi_sum(n, g, d, x);
        CHECK(jacobi_eval({static_cast<std::size_t>(n), g, d}, x) ==
              doctest::Approx(ref).epsilon(1e-10).scale(1.0));
    }
    CHECK_THROWS_AS(JacobiPolyParams(2, -1.0, 0.0), ParameterError);
}

TEST_CASE("orthogonality under the weight") {
    const double g = 2.0, d = 1.0;
    auto w = [&](double x) { return std::pow(1 - x, g) * std::pow(1 + x, d); };
    for (std::size_t m = 0; m < 5; ++m)
        for (std::size_t k = m + 1; k < 6; ++k) {
            const double ip = oracle::simpson(
                [&](double x) { return w(x) * jacobi_eval({m, g, d}, x) * jacobi_eval({k, g, d}, x); }, -1, 1, 4000);
            CHECK(std::abs(ip) < 1e-9);
        }
}

TEST_CASE("monic factor") {
    CHECK(monic_factor({0, 0.4, 0.1}) == 1.0);
    CHECK(monic_factor({1, 0, 0}) == doctest::Approx(1.0));
    CHECK(monic_factor({2, 0, 0}) == doctest::Approx(2.0 / 3.0));
    for (double x : {-0.8, 0.0, 0.35}) CHECK(monic_factor({2, 0, 0}) * jacobi_eval({2, 0, 0}, x) == doctest::Approx(x * x - 1.0 / 3.0));
}

TEST_CASE("roots of P_n(x/2)") {
    const Spectrum one = jacobi_roots_scaled({1, 0.7, 2.1});
    CHECK(one[0] == doctest::Approx(2 * (2.1 - 0.7) / (0.7 + 2.1 + 2)));
    const Spectrum leg = jacobi_roots_scaled({2, 0, 0});
    CHECK(leg[0] == doctest::Approx(-2 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(leg[1] == doctest::Approx(2 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(leg.provenance() == Provenance::deterministic);

    const Spectrum sym = jacobi_roots_scaled({9, 1.3, 1.3});
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(sym[i] + sym[8 - i]) < 1e-12);

    for (std::size_t n = 1; n <= 9; ++n) {
        const JacobiPolyParams p(n, 2.5, -0.4);
        const Spectrum r = jacobi_roots_scaled(p);
        const auto brute = oracle::sign_change_roots([&](double x) { return jacobi_eval(p, x / 2); }, -2, 2, 4000);
        REQUIRE(brute.size() == n);
        for (std::size_t i = 0; i < n; ++i) CHECK(r[i] == doctest::Approx(brute[i]).epsilon(1e-9));
    }
}

TEST_CASE("roots interlace and stay inside (-2, 2)") {
    for (double g : {-0.5, 0.0, 4.0, 1e6})
        for (double d : {-0.7, 1.0, 300.0}) {
            Spectrum prev = jacobi_roots_scaled({1, g, d});
            for (std::size_t n = 2; n <= 30; ++n) {
                const Spectrum cur = jacobi_roots_scaled({n, g, d});
                CHECK(cur[0] > -2.0);
                CHECK(cur[n - 1] < 2.0);
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    CHECK(cur[i] < prev[i]);
                    CHECK(prev[i] < cur[i + 1]);
                }
                prev = cur;
            }
        }
}

TEST_CASE("mean matrix spectrum equals the polynomial roots") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (double at : {0.5, 1.0, 3.7})
            for (double bt : {0.5, 1.0, 3.7}) {
                const Spectrum d = eig_tridiag(build_mean_tridiag(n, at, bt));
                const Spectrum r = jacobi_roots_scaled({n, at - 1, bt - 1});
                for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(d[i] - r[i]) < 1e-10);
            }
}

TEST_CASE("characteristic polynomial of the mean matrix") {
    RngStream rng(2, 0);
    for (std::size_t n = 1; n <= 8; ++n)
        for (double at : {0.5, 3.7})
            for (double bt : {1.0, 3.7}) {
                const SymTridiag d = build_mean_tridiag(n, at, bt);
                const JacobiPolyParams p(n, at - 1, bt - 1);
                for (int i = 0; i < 20; ++i) {
                    const double x = 4 * rng.uniform() - 2;
                    const double ref = monic_factor(p) * std::pow(2.0, static_cast<double>(n)) * jacobi_eval(p, x / 2);
                    CHECK(charpoly_eval(d, x) == doctest::Approx(ref).epsilon(1e-8).scale(0.0));
                }
            }
}

TEST_CASE("contiguous identities") {
    CHECK(identity_residual_degree_step({2, 1, 1}, 0.0) < 1e-12);
    const JacobiPolyParams a(5, 2.5, 0.5);
    CHECK(identity_residual_degree_step(a, 0.3) / identity_scale_degree_step(a, 0.3) < 1e-10);
    CHECK(identity_residual_parameter_step({1, 1, 1}, 0.0) < 1e-12);
    const JacobiPolyParams b(4, 3, 2);
    CHECK(identity_residual_parameter_step(b, -0.7) / identity_scale_parameter_step(b, -0.7) < 1e-10);

    RngStream rng(3, 0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const JacobiPolyParams p(2 + static_cast<std::size_t>(9 * rng.uniform()), 0.05 + 6 * rng.uniform(),
                                 0.05 + 6 * rng.uniform());
        const double x = 2 * rng.uniform() - 1;
        worst = std::max(worst, identity_residual_degree_step(p, x) / identity_scale_degree_step(p, x));
        worst = std::max(worst, identity_residual_parameter_step(p, x) / identity_scale_parameter_step(p, x));
    }
    CHECK(worst < 1e-9);
}
