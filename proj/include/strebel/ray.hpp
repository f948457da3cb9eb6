#pragma once

#include <string>

#include "strebel/surface.hpp"

namespace strebel {

// A point on the geodesic ray through `base`: cylinder j at time t has
// circumference e^{-t} a_j and height e^{t} b_j, so the area is constant
// and the modulus grows like e^{2t} m_j.
struct RayState {
    CylinderSurface base;
    double time = 0.0;
};

// Applies the time-t stretch to every cylinder and scales the gluing
// offsets/lengths by e^{-t}.  Exact data does not survive the flow.
CylinderSurface flow(const CylinderSurface& surface, double t);

// Combinatorial descriptor of the limit of the ray: one node per
// cylinder, two punctured-disk components per node, and the gluing
// combinatorics on the outer boundaries with every side rescaled to
// circumference 1.  Stored as a canonical line-based text form so
// equality is byte comparison.
struct EndpointDescriptor {
    std::size_t node_count = 0;
    std::string canonical;
};

EndpointDescriptor endpoint_descriptor(const CylinderSurface& surface);

bool endpoints_equal(const EndpointDescriptor& d1, const EndpointDescriptor& d2);

}  // namespace strebel
