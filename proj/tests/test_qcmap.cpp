#include <doctest.h>

#include <cmath>
#include <complex>

#include "strebel/errors.hpp"
#include "strebel/qcmap.hpp"

using namespace strebel;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("choose_exponent picks a strict half-integer exponent") {
    SUBCASE("expanding ratio") {
        const auto e = choose_exponent(2.0, 0.5);
        CHECK(e.X == -2.0);
        CHECK(e.limit_target == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
        CHECK(e.limit_target < 2.0 + 0.5);
    }
    SUBCASE("contracting ratio") {
        const auto e = choose_exponent(0.5, 0.5);
        CHECK(e.X == 3.0);
        CHECK(e.limit_target == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
        CHECK(e.limit_target < 2.0 + 0.5);
    }
    SUBCASE("equal moduli") {
        const auto e = choose_exponent(1.0, 0.25);
        CHECK(e.X == 0.5);
        CHECK(e.limit_target == 1.0);
    }
    SUBCASE("the cap holds across parameters") {
        for (double M : {1.5, 2.0, 3.0, 10.0, 0.7, 0.2, 0.05})
            for (double eps : {0.5, 0.25, 0.1, 0.01}) {
                const auto e = choose_exponent(M, eps);
                CHECK(e.limit_target < std::max(M, 1.0 / M) + eps);
                CHECK(e.limit_target >= std::max(M, 1.0 / M) - 1e-12);
            }
    }
    CHECK_THROWS_AS(choose_exponent(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(choose_exponent(2.0, 1.5), DomainError);
}

TEST_CASE("radii") {
    const auto equal = make_config(1.0, 1.0, 0.5);
    const auto r0 = radii(equal, 0.0);
    CHECK(r0.delta == doctest::Approx(std::exp(-kPi)).epsilon(1e-15));
    CHECK(r0.Delta == doctest::Approx(std::exp(-kPi / 2.0)).epsilon(1e-15));

    const auto doubling = make_config(2.0, 1.0, 0.5);  // X = -2, E = 1/4
    const auto r1 = radii(doubling, 1.0);
    const double e2 = std::exp(2.0);
    CHECK(r1.delta == doctest::Approx(std::exp(-e2 * kPi)).epsilon(1e-13));
    CHECK(r1.Delta == doctest::Approx(std::exp(-e2 * kPi / 4.0)).epsilon(1e-13));

    CHECK_THROWS_AS(radii(equal, -1.0), NegativeTime);
}

TEST_CASE("affine_params") {
    const Complex c = 2.0 * std::polar(1.0, kPi / 4.0);
    const auto config = make_config(2.0, 1.0, 0.5, c);  // E = 1/4
    const auto ab = affine_params(config, 2.0);
    const double scale = std::exp(4.0) * kPi;
    CHECK(ab.alpha == doctest::Approx(-(kPi / 4.0) / (scale * 0.75)).epsilon(1e-14));
    CHECK(ab.beta ==
          doctest::Approx(7.0 / 3.0 + std::log(2.0) / (scale * 0.75)).epsilon(1e-14));

    // c = 1 freezes the parameters at (0, (M-E)/(1-E)).
    const auto plain = make_config(2.0, 1.0, 0.5);
    for (double t : {0.0, 1.0, 3.0}) {
        const auto p = affine_params(plain, t);
        CHECK(p.alpha == 0.0);
        CHECK(p.beta == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("affine_dilatation") {
    CHECK(affine_dilatation(0.0, 1.0) == 1.0);
    CHECK(affine_dilatation(0.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(affine_dilatation(0.0, 1.0 / 3.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(affine_dilatation(1.0, 1.0) ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
    // Symmetric in the sign of the twist.
    CHECK(affine_dilatation(0.3, 1.7) == affine_dilatation(-0.3, 1.7));
    CHECK_THROWS_AS(affine_dilatation(0.0, -1.0), DegenerateMap);
}

TEST_CASE("validity threshold") {
    SUBCASE("|c| >= 1 is valid immediately") {
        const auto config = make_config(2.0, 1.0, 0.5, Complex(3.0, 0.0));
        CHECK(validity_threshold(config) == 0.0);
        CHECK(threshold_met(config, 0.0));
    }
    SUBCASE("small |c| with a thin cylinder delays validity") {
        const auto config = make_config(2.0, 0.01, 0.5, Complex(0.1, 0.0));  // E = 1/4
        const double vt = validity_threshold(config);
        const double expected =
            0.5 * std::log(-std::log(0.1) / (1.75 * 0.01 * kPi));
        CHECK(vt == doctest::Approx(expected).epsilon(1e-14));
        CHECK(vt > 0.0);
        CHECK_FALSE(threshold_met(config, vt - 1e-9));
        CHECK(threshold_met(config, vt + 1e-9));
    }
}

TEST_CASE("eval_F boundary behavior") {
    const Complex c = std::polar(1.5, 0.3);
    auto config = make_config(2.0, 1.0, 0.5, c);  // E = 1/4, delta = e^{-pi}
    const auto r = radii(config, 0.0);
    REQUIRE(2.0 * r.Delta < 1.0);

    SUBCASE("inner circle: F = delta^{M-1} z") {
        for (double theta : {0.0, 0.7, 2.9, -1.3}) {
            const Complex z = std::polar(r.delta, theta);
            CHECK(std::abs(eval_F(config, 0.0, z) - r.delta * z) < 1e-14);
        }
    }
    SUBCASE("outer edge of the stretch: F = c z, continuous with Q") {
        for (double theta : {0.1, 1.1, -2.0}) {
            const Complex z = std::polar(r.Delta, theta);
            CHECK(std::abs(eval_F(config, 0.0, z) - c * z) < 1e-14);
        }
    }
    SUBCASE("Q matches h at |z| = 2 Delta") {
        config.psi_coeffs = {Complex(0.05, 0.02)};
        config.psi_bound = 0.2;
        for (double theta : {0.0, 2.2}) {
            const Complex z = std::polar(2.0 * r.Delta, theta);
            const Complex h = c * z + config.psi(z);
            CHECK(std::abs(eval_F(config, 0.0, z) - h) < 1e-14);
            const Complex just_out = std::polar(2.0 * r.Delta * (1.0 + 1e-9), theta);
            CHECK(std::abs(eval_F(config, 0.0, just_out) - eval_F(config, 0.0, z)) < 1e-7);
        }
    }
    SUBCASE("continuity across the stretch/interpolation seam") {
        const Complex lo = std::polar(r.Delta * (1.0 - 1e-10), 0.4);
        const Complex hi = std::polar(r.Delta * (1.0 + 1e-10), 0.4);
        CHECK(std::abs(eval_F(config, 0.0, lo) - eval_F(config, 0.0, hi)) < 1e-8);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(eval_F(config, 0.0, Complex(0.0, 0.0)), OutOfDomain);
        CHECK_THROWS_AS(eval_F(config, 0.0, Complex(1.0, 0.0)), OutOfDomain);
        const auto delayed = make_config(2.0, 0.01, 0.5, Complex(0.1, 0.0));
        CHECK_THROWS_AS(eval_F(delayed, 0.0, Complex(0.9, 0.0)), ValidityThresholdNotMet);
    }
}

TEST_CASE("make_config derives the psi bound from the coefficients") {
    const auto config =
        make_config(2.0, 1.0, 0.5, Complex(1.0, 0.0), {Complex(0.5, 0.0), Complex(0.0, 0.25)});
    CHECK(config.psi_bound == doctest::Approx(0.5 * 4.0 + 0.25 * 8.0).epsilon(1e-15));
    CHECK_THROWS_AS(make_config(2.0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(make_config(2.0, 1.0, 0.5, Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("dilatation trajectory: c = 1 sits exactly at the limit target") {
    for (double M : {2.0, 0.5, 1.0}) {
        const auto config = make_config(M, 1.0, 0.5);
        const auto report = dilatation_trajectory(config, {0.0, 0.5, 1.0, 2.0, 4.0});
        CHECK(report.limit_target == doctest::Approx(M == 1.0 ? 1.0 : 7.0 / 3.0).epsilon(1e-15));
        REQUIRE(report.first_valid_t.has_value());
        CHECK(*report.first_valid_t == 0.0);
        for (const auto& s : report.samples) {
            CHECK(s.valid);
            CHECK(s.k_total == doctest::Approx(report.limit_target).epsilon(1e-13));
        }
    }
}

TEST_CASE("dilatation trajectory converges like e^{-2t}") {
    const auto config = make_config(2.0, 1.0, 0.5, std::polar(1.4, 0.2));
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) grid.push_back(0.5 * i);
    const auto report = dilatation_trajectory(config, grid);
    double prev_gap = std::abs(report.samples.front().k_affine - report.limit_target);
    for (std::size_t i = 1; i < report.samples.size(); ++i) {
        const double gap = std::abs(report.samples[i].k_affine - report.limit_target);
        CHECK(gap < prev_gap);
        // e^{2t} grows by e each half-unit step; allow slack for the
        // nonlinearity of K in (alpha, beta).
        CHECK(gap <= prev_gap / std::exp(1.0) * 1.5);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("interpolation bound tends to one and validity is monotone") {
    const auto config = make_config(2.0, 0.05, 0.5, Complex(0.2, 0.0),
                                    {Complex(0.03, 0.0), Complex(0.0, 0.01)});
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(0.4 * i);
    const auto report = dilatation_trajectory(config, grid);
    REQUIRE(report.first_valid_t.has_value());
    CHECK(*report.first_valid_t ==
          doctest::Approx(validity_threshold(config)).epsilon(0.5));
    bool seen_valid = false;
    for (const auto& s : report.samples) {
        if (seen_valid) CHECK(s.valid);
        seen_valid = seen_valid || s.valid;
        CHECK(s.k_interp_bound >= 1.0);
        CHECK(s.k_total >= s.k_affine);
    }
    CHECK(report.samples.back().k_interp_bound == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("trajectory grid validation") {
    const auto config = make_config(2.0, 1.0, 0.5);
    CHECK_THROWS_AS(dilatation_trajectory(config, {}), DomainError);
    CHECK_THROWS_AS(dilatation_trajectory(config, {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(dilatation_trajectory(config, {1.0, 0.5}), DomainError);
}
