#include "strebel/ray.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "strebel/errors.hpp"

namespace strebel {

CylinderSurface flow(const CylinderSurface& surface, double t) {
    if (t < 0.0 || !std::isfinite(t)) throw NegativeTime("flow time must be nonnegative");
    const double shrink = std::exp(-t);
    const double stretch = std::exp(t);

    CylinderSurface out;
    out.cylinders.reserve(surface.cylinders.size());
    for (const auto& c : surface.cylinders)
        out.cylinders.push_back({c.circumference * shrink, c.height * stretch});
    out.gluing = surface.gluing;
    for (auto& s : out.gluing.segments) {
        s.offset *= shrink;
        s.length *= shrink;
    }
    // Exact data does not survive the irrational scale factors.
    return out;
}

namespace {

// Proportions are rounded to 12 significant digits before serialization so
// that uniformly rescaled gluings (in particular flowed surfaces) produce
// byte-identical descriptors despite last-ulp drift.
std::string fmt_proportion(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

EndpointDescriptor endpoint_descriptor(const CylinderSurface& surface) {
    const auto& segs = surface.gluing.segments;
    std::vector<std::size_t> order(segs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& sa = segs[a];
        const auto& sb = segs[b];
        if (sa.cylinder != sb.cylinder) return sa.cylinder < sb.cylinder;
        if (sa.side != sb.side) return sa.side < sb.side;
        return sa.offset < sb.offset;
    });
    std::vector<std::size_t> new_index(segs.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;

    std::string text;
    text += "nodes " + std::to_string(surface.cylinders.size()) + "\n";
    for (std::size_t j = 0; j < surface.cylinders.size(); ++j)
        text += "node " + std::to_string(j) + " disks 2\n";
    for (std::size_t i : order) {
        const auto& s = segs[i];
        const double a = surface.cylinders[s.cylinder].circumference;
        text += "seg cyl=" + std::to_string(s.cylinder) +
                " side=" + (s.side == Side::Top ? std::string("top") : std::string("bottom")) +
                " off=" + fmt_proportion(s.offset / a) + " len=" + fmt_proportion(s.length / a) + "\n";
    }
    for (std::size_t i : order) {
        const std::size_t a = new_index[i];
        const std::size_t b = new_index[surface.gluing.pairing[i]];
        if (a < b)
            text += "pair " + std::to_string(a) + " " + std::to_string(b) + " sign=" +
                    (surface.gluing.flipped[i] ? "-" : "+") + "\n";
    }

    EndpointDescriptor d;
    d.node_count = surface.cylinders.size();
    d.canonical = std::move(text);
    return d;
}

bool endpoints_equal(const EndpointDescriptor& d1, const EndpointDescriptor& d2) {
    return d1.canonical == d2.canonical;
}

}  // namespace strebel
