#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "jacobi/ensemble.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/spectra.hpp"
#include "jacobi/trieig.hpp"

using namespace jacobi;

TEST_CASE("parameter validation names the constraint") {
    CHECK_THROWS_AS(JacobiParams(0, 0, 0, 2), ParameterError);
    CHECK_THROWS_WITH_AS(JacobiParams(3, -1, 0, 2), doctest::Contains("a > -1"), ParameterError);
    CHECK_THROWS_WITH_AS(JacobiParams(3, 0, -1.5, 2), doctest::Contains("b > -1"), ParameterError);
    CHECK_THROWS_WITH_AS(JacobiParams(3, 0, 0, 0), doctest::Contains("beta > 0"), ParameterError);
    const JacobiParams p(4, 1.0, 3.0, 0.5);
    CHECK(p.a_tilde() == doctest::Approx(8.0));
    CHECK(p.b_tilde() == doctest::Approx(16.0));
    const JacobiParams q = JacobiParams::from_tilde(4, 8.0, 16.0, 0.5);
    CHECK(q.a() == doctest::Approx(1.0));
    CHECK(q.b() == doctest::Approx(3.0));
}

TEST_CASE("alpha shapes") {
    const JacobiParams p(2, 0, 0, 2);
    CHECK(alpha_shape_params(p, 0).p == doctest::Approx(2.0));
    CHECK(alpha_shape_params(p, 0).q == doctest::Approx(2.0));
    CHECK(alpha_shape_params(p, 1).p == doctest::Approx(2.0));
    CHECK(alpha_shape_params(p, 1).q == doctest::Approx(1.0));
    CHECK_THROWS_AS(alpha_shape_params(p, 3), std::out_of_range);

    for (double a : {-0.99, 0.0, 5.0})
        for (double b : {-0.99, 0.3})
            for (double beta : {0.01, 1.0, 7.0}) {
                const JacobiParams r(6, a, b, beta);
                for (std::size_t k = 0; k <= 10; ++k) {
                    const BetaParams s = alpha_shape_params(r, k);
                    CHECK(s.p > 0.0);
                    CHECK(s.q > 0.0);
                }
            }
}

TEST_CASE("sampled alphas") {
    RngStream rng(1, 0);
    const JacobiParams one(1, 0.5, 0.5, 2);
    CHECK(sample_alphas(one, rng).size() == 1);

    const JacobiParams p(5, 2.0, 2.0, 1.0);
    std::vector<double> sums(9, 0.0);
    constexpr int reps = 10000;
    for (int r = 0; r < reps; ++r) {
        const AlphaVector al = sample_alphas(p, rng);
        REQUIRE(al.size() == 9);
        for (std::size_t k = 0; k < al.size(); ++k) {
            REQUIRE(al.values()[k] > -1.0);
            REQUIRE(al.values()[k] < 1.0);
            sums[k] += al.values()[k];
        }
        CHECK(al.at(-1) == -1.0);
        CHECK(al.at(-2) == -1.0);
        CHECK(al.at(9) == -1.0);
    }
    for (std::size_t k = 0; k < 9; k += 2) CHECK(std::abs(sums[k] / reps) < 0.02);
}

TEST_CASE("random matrix entries follow the displayed formulas") {
    RngStream rng(2, 0);
    const JacobiParams p(6, 1.0, 0.5, 2.0);
    const AlphaVector al = sample_alphas(p, rng);
    const SymTridiag j = build_random_tridiag(al);
    REQUIRE(j.size() == 6);
    CHECK(j.diag[0] == doctest::Approx(2.0 * al.values()[0]));

    // Written with explicit boundary values rather than AlphaVector::at.
    auto alpha = [&](long k) { return (k < 0 || k > 10) ? -1.0 : al.values()[static_cast<std::size_t>(k)]; };
    for (long k = 0; k < 6; ++k) {
        const double b = (1 - alpha(2 * k - 1)) * alpha(2 * k) - (1 + alpha(2 * k - 1)) * alpha(2 * k - 2);
        CHECK(j.diag[k] == doctest::Approx(b).epsilon(1e-14));
    }
    for (long k = 0; k < 5; ++k) {
        const double a = std::sqrt((1 - alpha(2 * k - 1)) * (1 - alpha(2 * k) * alpha(2 * k)) * (1 + alpha(2 * k + 1)));
        CHECK(j.off[k] == doctest::Approx(a).epsilon(1e-14));
    }
}

TEST_CASE("entry ranges") {
    // Brute-force maximum over the cube of the entry expressions.
    double diag_max = 0.0, off_max = 0.0;
    constexpr int g = 60;
    for (int i = 0; i <= g; ++i)
        for (int k = 0; k <= g; ++k)
            for (int l = 0; l <= g; ++l) {
                const double x = -1.0 + 2.0 * i / g, y = -1.0 + 2.0 * k / g, z = -1.0 + 2.0 * l / g;
                diag_max = std::max(diag_max, std::abs((1 - x) * y - (1 + x) * z));
                off_max = std::max(off_max, std::sqrt((1 - x) * (1 - y * y) * (1 + z)));
            }
    CHECK(diag_max <= 2.0 + 1e-12);
    CHECK(off_max <= 2.0 + 1e-12);

    RngStream rng(3, 0);
    for (int t = 0; t < 100000; ++t) {
        const SymTridiag j = build_random_tridiag(sample_alphas(JacobiParams(3, -0.5, 0.2, 0.7), rng));
        for (double d : j.diag) REQUIRE(std::abs(d) <= 2.0);
        for (double o : j.off) {
            REQUIRE(o > 0.0);
            REQUIRE(o <= 2.0 * std::sqrt(2.0));
        }
    }
}

TEST_CASE("mean matrix closed form") {
    const SymTridiag sym = build_mean_tridiag(7, 3.5, 3.5);
    for (double d : sym.diag) CHECK(d == doctest::Approx(0.0));
    for (double c : sym.off) CHECK(c > 0.0);

    const SymTridiag two = build_mean_tridiag(2, 1.0, 1.0);
    CHECK(two.diag[0] == doctest::Approx(0.0));
    CHECK(two.diag[1] == doctest::Approx(0.0));
    CHECK(two.off[0] == doctest::Approx(2.0 / std::sqrt(3.0)));
    const Spectrum s = eig_tridiag(two);
    CHECK(s[0] == doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

    const SymTridiag one = build_mean_tridiag(1, 2.0, 4.0);
    REQUIRE(one.size() == 1);
    CHECK(one.diag[0] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("mean matrix is the reversed random matrix at the alpha means") {
    for (const JacobiParams& p : {JacobiParams(1, 0.3, 2.0, 1.5), JacobiParams(2, 0, 0, 2), JacobiParams(9, 4.0, 1.0, 0.7)}) {
        const SymTridiag j = build_random_tridiag(mean_alphas(p));
        const SymTridiag d = build_mean_tridiag(p);
        const std::size_t n = p.n();
        for (std::size_t k = 0; k < n; ++k) CHECK(j.diag[n - 1 - k] == doctest::Approx(d.diag[k]).epsilon(1e-12));
        for (std::size_t k = 0; k + 1 < n; ++k) CHECK(j.off[n - 2 - k] == doctest::Approx(d.off[k]).epsilon(1e-12));
    }
}

TEST_CASE("random matrix expectation matches the mean matrix") {
    const JacobiParams p(20, 10.0, 4.0, 2.0);
    const SymTridiag d = build_mean_tridiag(p);
    const std::size_t n = p.n();
    std::vector<double> sd(n, 0), sd2(n, 0), so(n - 1, 0), so2(n - 1, 0);
    constexpr int reps = 100000;
    RngStream rng(4, 0);
    for (int r = 0; r < reps; ++r) {
        const SymTridiag j = build_random_tridiag(sample_alphas(p, rng));
        for (std::size_t k = 0; k < n; ++k) {
            sd[k] += j.diag[k];
            sd2[k] += j.diag[k] * j.diag[k];
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            so[k] += j.off[k];
            so2[k] += j.off[k] * j.off[k];
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double m = sd[k] / reps;
        const double se = std::sqrt((sd2[k] / reps - m * m) / reps);
        CHECK(std::abs(m - d.diag[n - 1 - k]) <= 3.0 * se + 1e-12);
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double m = so[k] / reps;
        const double se = std::sqrt((so2[k] / reps - m * m) / reps);
        CHECK(std::abs(m - d.off[n - 2 - k]) <= 0.25 * d.off[n - 2 - k] + 3.0 * se);
    }
}

TEST_CASE("swapping the exponents mirrors the spectrum") {
    const JacobiParams p(8, 3.0, 0.5, 1.3);
    const Spectrum s = eig_tridiag(build_mean_tridiag(p));
    const Spectrum t = eig_tridiag(build_mean_tridiag(p.swapped()));
    for (std::size_t i = 0; i < 8; ++i) CHECK(s[i] == doctest::Approx(-t[7 - i]).epsilon(1e-12));

    const JacobiParams q(10, 2.0, 0.0, 2.0);
    std::vector<double> direct, swapped;
    for (std::uint64_t t2 = 0; t2 < 10000; ++t2) {
        RngStream r1(5, t2), r2(6, t2);
        for (double v : sample_spectrum(q, r1).values()) direct.push_back(v);
        for (double v : sample_spectrum(q.swapped(), r2).values()) swapped.push_back(-v);
    }
    CHECK(ks_two_sample(Ecdf(direct), Ecdf(swapped)) < 0.02);
}
