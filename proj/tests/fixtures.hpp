#pragma once

#include <vector>

#include "strebel/surface.hpp"

namespace fixtures {

// Single cylinder with its bottom glued to its top by one full segment.
inline strebel::CylinderSurface torus(double a = 1.0, double b = 1.0) {
    using namespace strebel;
    GluingTable g;
    g.segments = {{0, Side::Bottom, 0.0, a}, {0, Side::Top, 0.0, a}};
    g.pairing = {1, 0};
    g.flipped = {false, false};
    return build_surface({{a, b}}, std::move(g));
}

// Two cylinders (1,1), (1,2); bottom of each glued to the top of the other.
inline strebel::CylinderSurface two_cylinder(double scale = 1.0) {
    using namespace strebel;
    GluingTable g;
    g.segments = {{0, Side::Bottom, 0.0, scale},
                  {0, Side::Top, 0.0, scale},
                  {1, Side::Bottom, 0.0, scale},
                  {1, Side::Top, 0.0, scale}};
    g.pairing = {3, 2, 1, 0};
    g.flipped = {false, false, false, false};
    return build_surface({{scale, scale}, {scale, 2.0 * scale}}, std::move(g));
}

// One cylinder of circumference 2 with two segments per side, glued with a
// half-turn (bottom-left to top-right and vice versa).
inline strebel::CylinderSurface half_turn(double a = 2.0, double b = 1.0) {
    using namespace strebel;
    GluingTable g;
    const double h = a / 2.0;
    g.segments = {{0, Side::Bottom, 0.0, h},
                  {0, Side::Bottom, h, h},
                  {0, Side::Top, 0.0, h},
                  {0, Side::Top, h, h}};
    g.pairing = {3, 2, 1, 0};
    g.flipped = {false, false, false, false};
    return build_surface({{a, b}}, std::move(g));
}

}  // namespace fixtures
