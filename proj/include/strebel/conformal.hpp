#pragma once

#include <complex>

namespace strebel {

using Complex = std::complex<double>;

// Chart from the lower half of a cut rectangle-cylinder of circumference a
// onto a round annulus: z -> exp(2 pi i z / a).  Re z is reduced mod a
// before exponentiating.
Complex rect_to_round(Complex z, double a);

// Inner-boundary identification of the two half annuli of modulus m/2:
// w -> exp(-2 m pi) / w.  An involution fixing the circle |w| = exp(-m pi)
// setwise.
Complex glue_involution(Complex w, double m);

// Radial stretch in round coordinates: r e^{i theta} -> r^{e^{2t}} e^{i theta}.
// Requires 0 < |w| < 1.
Complex round_flow(Complex w, double t);

// Conformal modulus of the annulus {r <= |w| < 1}.
double annulus_modulus(double inner_radius);

// Sup over a grid_size x grid_size grid in the lower half rectangle of the
// discrepancy between (flow in round coordinates after the time-0 chart)
// and (the time-t chart after the rectangle flow).  Both routes agree
// analytically; the return value is the numerical sup error.
double check_diagram_commutativity(double a, double b, double t, int grid_size);

}  // namespace strebel
