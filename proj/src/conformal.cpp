#include "strebel/conformal.hpp"

#include <cmath>

#include "strebel/errors.hpp"

namespace strebel {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Complex rect_to_round(Complex z, double a) {
    if (!(a > 0.0)) throw DomainError("circumference must be positive");
    // Reduce Re z into [0, a) before exponentiating; the chart is periodic
    // and large real parts would lose all angular accuracy.
    double x = std::fmod(z.real(), a);
    if (x < 0.0) x += a;
    const double y = z.imag();
    const double r = std::exp(-kTwoPi * y / a);
    const double theta = kTwoPi * x / a;
    return std::polar(r, theta);
}

Complex glue_involution(Complex w, double m) {
    if (w == Complex(0.0)) throw ZeroInput("glue involution is undefined at 0");
    if (!(m > 0.0)) throw DomainError("modulus must be positive");
    return std::exp(-2.0 * m * (kTwoPi / 2.0)) / w;
}

Complex round_flow(Complex w, double t) {
    const double r = std::abs(w);
    if (r == 0.0 || r >= 1.0) throw DomainError("round_flow needs 0 < |w| < 1");
    if (t < 0.0) throw NegativeTime("flow time must be nonnegative");
    const double rt = std::pow(r, std::exp(2.0 * t));
    return std::polar(rt, std::arg(w));
}

double annulus_modulus(double inner_radius) {
    if (!(inner_radius > 0.0 && inner_radius < 1.0))
        throw DomainError("inner radius must lie in (0, 1)");
    return std::log(1.0 / inner_radius) / kTwoPi;
}

double check_diagram_commutativity(double a, double b, double t, int grid_size) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("rectangle sides must be positive");
    if (grid_size < 1) throw DomainError("grid size must be positive");
    if (t < 0.0) throw NegativeTime("flow time must be nonnegative");

    const double shrink = std::exp(-t);
    const double stretch = std::exp(t);
    double sup = 0.0;
    for (int ix = 0; ix <= grid_size; ++ix) {
        const double x = a * static_cast<double>(ix) / grid_size;
        for (int iy = 1; iy <= grid_size; ++iy) {
            const double y = 0.5 * b * static_cast<double>(iy) / grid_size;
            // Chart first, then the radial stretch in round coordinates.
            const Complex via_round = round_flow(rect_to_round(Complex(x, y), a), t);
            // Rectangle flow first, then the time-t chart.
            const Complex zt(shrink * x, stretch * y);
            const Complex via_rect = rect_to_round(zt, shrink * a);
            sup = std::max(sup, std::abs(via_round - via_rect));
        }
    }
    return sup;
}

}  // namespace strebel
