#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "strebel/conformal.hpp"

namespace strebel {

// Per-annulus data of the quasiconformal interpolation F_t between the
// punctured disks of the two rays.  M is the modulus ratio m'/m, X the
// chosen exponent, c the leading coefficient of the end identification
// h(z) = c z + psi(z), psi_bound a constant C with |psi(z)| <= C Delta^2.
struct QcMapConfig {
    double M = 1.0;
    double m = 1.0;
    double epsilon = 0.5;
    double X = 0.5;
    Complex c = 1.0;
    double psi_bound = 0.0;
    std::vector<Complex> psi_coeffs;  // polynomial tail, degrees 2, 3, ...

    // Exponent actually used for Delta = delta^E: M^X, except 1/2 when M = 1.
    double delta_exponent() const;
    double limit_target() const;
    Complex psi(Complex z) const;
};

// Picks the exponent X strictly inside the admissible region (midpoint
// rule on a half-integer grid, see below) and returns it with the limit
// dilatation target (M - M^X)/(1 - M^X), or its reciprocal form for M < 1,
// or 1 for M = 1.
struct ExponentChoice {
    double X = 0.5;
    double limit_target = 1.0;
};

ExponentChoice choose_exponent(double M, double epsilon);

// Builds a config with the exponent rule applied and, when a polynomial
// tail is given, a bound C derived from its coefficients on |z| <= 2 Delta.
QcMapConfig make_config(double M, double m, double epsilon, Complex c = 1.0,
                        std::vector<Complex> psi_coeffs = {});

struct Radii {
    double delta = 0.0;  // exp(-e^{2t} m pi), inner radius at time t
    double Delta = 0.0;  // delta^E, outer edge of the stretch piece
};

Radii radii(const QcMapConfig& config, double t);

// Affine-stretch parameters of the middle map at time t.
struct AffineParams {
    double alpha = 0.0;
    double beta = 1.0;
};

AffineParams affine_params(const QcMapConfig& config, double t);

// K = (|1+b-ia| + |1-b+ia|) / (|1+b-ia| - |1-b+ia|); throws DegenerateMap
// when the denominator is not positive.
double affine_dilatation(double alpha, double beta);

// Smallest t for which delta(t)^M < |c| delta(t)^E; the piecewise map is
// defined only beyond this threshold.
double validity_threshold(const QcMapConfig& config);
bool threshold_met(const QcMapConfig& config, double t);

// Piecewise evaluation of F_t: the radial stretch P on delta <= |z| <= Delta,
// the interpolation Q on Delta <= |z| <= 2 Delta, the end identification h
// on 2 Delta <= |z| < 1.
Complex eval_F(const QcMapConfig& config, double t, Complex z);

struct DilatationSample {
    double t = 0.0;
    bool valid = false;  // threshold_met at this t
    double k_affine = 1.0;
    double k_interp_bound = 1.0;
    double k_total = 1.0;
};

struct DilatationReport {
    std::vector<DilatationSample> samples;
    double limit_target = 1.0;
    std::optional<double> first_valid_t;  // smallest grid t past the threshold
};

// Evaluates the dilatation along an increasing time grid.  K(Q) is
// reported as the derivative-estimate upper bound
// (|c| + C Delta/2 + 2 C Delta)/(|c| - C Delta/2 - 2 C Delta), clipped at 1,
// which tends to 1; the identification piece is conformal.
DilatationReport dilatation_trajectory(const QcMapConfig& config,
                                       const std::vector<double>& t_grid);

}  // namespace strebel
