#include <doctest.h>

#include <cmath>

#include "strebel/conformal.hpp"
#include "strebel/errors.hpp"

using namespace strebel;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rect_to_round is the exponential chart") {
    CHECK(std::abs(rect_to_round({0.0, 0.0}, 1.0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(rect_to_round({1.0, 0.0}, 1.0) - Complex(1.0, 0.0)) < 1e-15);  // period a
    CHECK(std::abs(rect_to_round({0.0, 0.5}, 1.0) - Complex(std::exp(-kPi), 0.0)) < 1e-15);
}

TEST_CASE("half-cylinder and its round image have the same modulus") {
    for (double m : {0.25, 0.5, 1.0, 2.0, 3.7}) {
        // Height b/2 of a cylinder with modulus m maps to inner radius e^{-m pi}.
        const double inner = std::abs(rect_to_round({0.0, m / 2.0}, 1.0));
        CHECK(std::abs(annulus_modulus(inner) - m / 2.0) < 1e-12);
    }
}

TEST_CASE("glue_involution is an involution preserving the inner circle") {
    for (double m : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 100; ++i) {
            const double theta = 2.0 * kPi * i / 100.0;
            const Complex w = std::polar(std::exp(-m * kPi), theta);
            CHECK(std::abs(std::abs(glue_involution(w, m)) - std::exp(-m * kPi)) < 1e-15);
            const Complex w2 = std::polar(0.7 * std::exp(-m * kPi) + 0.2, theta);
            CHECK(std::abs(glue_involution(glue_involution(w2, m), m) - w2) < 1e-15);
        }
        CHECK(std::abs(glue_involution(Complex(std::exp(-m * kPi), 0.0), m) -
                       Complex(std::exp(-m * kPi), 0.0)) < 1e-15);
    }
    CHECK_THROWS_AS(glue_involution(Complex(0.0, 0.0), 1.0), ZeroInput);
}

TEST_CASE("round_flow exponentiates the radius and keeps the angle") {
    const Complex w = std::polar(std::exp(-kPi), 1.234);
    CHECK(std::abs(round_flow(w, 0.0) - w) < 1e-15);

    const Complex wt = round_flow(w, 0.5 * std::log(2.0));  // e^{2t} = 2
    CHECK(std::abs(std::abs(wt) - std::exp(-2.0 * kPi)) < 1e-15);

    for (int i = 1; i < 20; ++i) {
        const Complex z = std::polar(0.05 * i, 0.37 * i);
        CHECK(std::abs(std::arg(round_flow(z, 1.3)) - std::arg(z)) < 1e-15);
    }
    CHECK_THROWS_AS(round_flow(Complex(0.0, 0.0), 1.0), DomainError);
    CHECK_THROWS_AS(round_flow(Complex(1.5, 0.0), 1.0), DomainError);
}

TEST_CASE("round_flow is a semigroup") {
    const Complex w = std::polar(0.42, -0.8);
    for (auto [s, t] : {std::pair{0.2, 0.9}, {1.0, 1.0}, {0.0, 0.5}}) {
        const Complex a = round_flow(round_flow(w, s), t);
        const Complex b = round_flow(w, s + t);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("chart and flow commute") {
    CHECK(check_diagram_commutativity(1.0, 1.0, 0.0, 16) < 1e-15);
    CHECK(check_diagram_commutativity(1.0, 1.0, 1.0, 32) < 1e-12);
    CHECK(check_diagram_commutativity(2.0, 3.0, 0.5, 64) < 1e-12);
}
