#include "strebel/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "strebel/errors.hpp"

namespace strebel {

double CylinderSurface::area() const {
    double a = 0.0;
    for (const auto& c : cylinders) a += c.circumference * c.height;
    return a;
}

bool CylinderSurface::is_unit_norm(double tol) const {
    return std::abs(area() - 1.0) <= tol;
}

std::optional<std::vector<Rat>> CylinderSurface::exact_moduli() const {
    if (!exact) return std::nullopt;
    std::vector<Rat> out;
    out.reserve(cylinders.size());
    for (std::size_t j = 0; j < cylinders.size(); ++j)
        out.push_back(exact->height[j] / exact->circumference[j]);
    return out;
}

namespace {

void validate_cylinders(const std::vector<Cylinder>& cylinders) {
    if (cylinders.empty()) throw NonPositiveDatum("no cylinders");
    for (std::size_t j = 0; j < cylinders.size(); ++j) {
        const auto& c = cylinders[j];
        if (!(c.circumference > 0.0) || !std::isfinite(c.circumference))
            throw NonPositiveDatum("cylinder " + std::to_string(j) + ": circumference must be positive");
        if (!(c.height > 0.0) || !std::isfinite(c.height))
            throw NonPositiveDatum("cylinder " + std::to_string(j) + ": height must be positive");
    }
}

void validate_pairing(const GluingTable& g) {
    const std::size_t n = g.segments.size();
    if (g.pairing.size() != n || g.flipped.size() != n)
        throw PairingError("pairing/sign tables must cover every segment");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = g.pairing[i];
        if (p >= n) throw PairingError("pairing index out of range");
        if (p == i) throw PairingError("pairing has a fixed point at segment " + std::to_string(i));
        if (g.pairing[p] != i) throw PairingError("pairing is not an involution");
        if (g.flipped[i] != g.flipped[p])
            throw PairingError("orientation flags disagree within pair (" + std::to_string(i) +
                               ", " + std::to_string(p) + ")");
    }
}

// Segments on one cylinder side must tile [0, a]: sorted by offset,
// starting at 0, abutting, ending at a.
template <typename Value, typename Near>
void check_partition(const std::vector<std::size_t>& idx, const std::vector<Value>& offsets,
                     const std::vector<Value>& lengths, const Value& circumference, Near near,
                     const std::string& where) {
    Value cursor{};
    for (std::size_t i : idx) {
        if (!near(offsets[i], cursor))
            throw PartitionError(where + ": segments do not tile the side (gap or overlap at segment " +
                                 std::to_string(i) + ")");
        cursor = offsets[i] + lengths[i];
    }
    if (!near(cursor, circumference))
        throw PartitionError(where + ": segment lengths do not sum to the circumference");
}

}  // namespace

CylinderSurface build_surface(std::vector<Cylinder> cylinders, GluingTable gluing,
                              std::optional<ExactSurfaceData> exact) {
    validate_cylinders(cylinders);

    const std::size_t n = gluing.segments.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = gluing.segments[i];
        if (s.cylinder >= cylinders.size())
            throw PairingError("segment " + std::to_string(i) + " refers to an unknown cylinder");
        if (!(s.length > 0.0)) throw NonPositiveDatum("segment " + std::to_string(i) + ": length must be positive");
        if (s.offset < -kTol) throw PartitionError("segment " + std::to_string(i) + ": negative offset");
    }
    validate_pairing(gluing);

    if (exact) {
        if (exact->circumference.size() != cylinders.size() || exact->height.size() != cylinders.size() ||
            exact->seg_offset.size() != n || exact->seg_length.size() != n)
            throw NonPositiveDatum("exact data does not mirror the surface data");
    }

    // Group segment indices per (cylinder, side) and check the tilings.
    for (std::size_t j = 0; j < cylinders.size(); ++j) {
        for (Side side : {Side::Bottom, Side::Top}) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (gluing.segments[i].cylinder == j && gluing.segments[i].side == side) idx.push_back(i);
            if (idx.empty())
                throw PartitionError("cylinder " + std::to_string(j) + ": a horizontal side has no segments");
            const std::string where = "cylinder " + std::to_string(j) +
                                      (side == Side::Top ? " top" : " bottom");
            if (exact) {
                std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    return exact->seg_offset[a] < exact->seg_offset[b];
                });
                check_partition<Rat>(idx, exact->seg_offset, exact->seg_length, exact->circumference[j],
                                     [](const Rat& x, const Rat& y) { return x == y; }, where);
            } else {
                std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    return gluing.segments[a].offset < gluing.segments[b].offset;
                });
                std::vector<double> off(n), len(n);
                for (std::size_t i = 0; i < n; ++i) {
                    off[i] = gluing.segments[i].offset;
                    len[i] = gluing.segments[i].length;
                }
                const double scale = std::max(1.0, cylinders[j].circumference);
                check_partition<double>(idx, off, len, cylinders[j].circumference,
                                        [scale](double x, double y) { return std::abs(x - y) <= kTol * scale; },
                                        where);
            }
        }
    }

    // Paired segments identify isometrically, so their lengths must match.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = gluing.pairing[i];
        if (p < i) continue;
        if (exact) {
            if (exact->seg_length[i] != exact->seg_length[p])
                throw PairingError("paired segments " + std::to_string(i) + ", " + std::to_string(p) +
                                   " have different lengths");
        } else if (std::abs(gluing.segments[i].length - gluing.segments[p].length) > kTol) {
            throw PairingError("paired segments " + std::to_string(i) + ", " + std::to_string(p) +
                               " have different lengths");
        }
    }

    CylinderSurface surface;
    surface.cylinders = std::move(cylinders);
    surface.gluing = std::move(gluing);
    surface.exact = std::move(exact);
    return surface;
}

std::vector<double> moduli_vector(const CylinderSurface& surface) {
    std::vector<double> out;
    out.reserve(surface.cylinders.size());
    for (const auto& c : surface.cylinders) out.push_back(c.modulus());
    return out;
}

std::shared_ptr<const CurveFamily> make_family(std::vector<std::string> names,
                                               std::vector<std::vector<double>> pairing) {
    const std::size_t k = names.size();
    if (pairing.size() != k) throw FamilyMismatch("pairing matrix size does not match family");
    for (std::size_t i = 0; i < k; ++i) {
        if (pairing[i].size() != k) throw FamilyMismatch("pairing matrix is not square");
        if (pairing[i][i] != 0.0) throw FamilyMismatch("pairing diagonal must be zero");
        for (std::size_t j = 0; j < k; ++j) {
            if (pairing[i][j] < 0.0) throw FamilyMismatch("intersection numbers must be nonnegative");
            if (pairing[i][j] != pairing[j][i]) throw FamilyMismatch("pairing matrix must be symmetric");
        }
    }
    auto fam = std::make_shared<CurveFamily>();
    fam->names = std::move(names);
    fam->pairing = std::move(pairing);
    return fam;
}

std::vector<std::size_t> MeasuredMulticurve::support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < weights.size(); ++j)
        if (weights[j] > 0.0) out.push_back(j);
    return out;
}

MeasuredMulticurve make_multicurve(std::shared_ptr<const CurveFamily> family,
                                   std::vector<double> weights) {
    if (!family) throw FamilyMismatch("multicurve needs a family");
    if (weights.size() != family->size()) throw FamilyMismatch("weight count does not match family");
    for (double w : weights)
        if (w < 0.0) throw NonPositiveDatum("multicurve weights must be nonnegative");
    return MeasuredMulticurve{std::move(family), std::move(weights)};
}

namespace {

const CurveFamily& shared_family(const MeasuredMulticurve& mu, const MeasuredMulticurve& nu) {
    if (!mu.family || !nu.family) throw FamilyMismatch("multicurve without a family");
    if (mu.family != nu.family &&
        (mu.family->names != nu.family->names || mu.family->pairing != nu.family->pairing))
        throw FamilyMismatch("multicurves are defined over different families");
    return *mu.family;
}

}  // namespace

double intersection_number(const MeasuredMulticurve& mu, const MeasuredMulticurve& nu) {
    const CurveFamily& fam = shared_family(mu, nu);
    double total = 0.0;
    for (std::size_t j = 0; j < fam.size(); ++j) {
        if (mu.weights[j] == 0.0) continue;
        for (std::size_t jp = 0; jp < fam.size(); ++jp)
            total += mu.weights[j] * nu.weights[jp] * fam.pairing[j][jp];
    }
    return total;
}

FoliationRelation foliation_relation(const MeasuredMulticurve& h, const MeasuredMulticurve& hp) {
    const CurveFamily& fam = shared_family(h, hp);
    const auto sh = h.support();
    const auto shp = hp.support();
    bool same_support = sh == shp;
    bool disjoint = true;
    for (std::size_t a : sh)
        for (std::size_t b : sh)
            if (fam.pairing[a][b] != 0.0) disjoint = false;
    if (same_support && disjoint) return FoliationRelation::TopEquivAbsCont;
    return intersection_number(h, hp) == 0.0 ? FoliationRelation::NotTopEquivZeroIntersection
                                             : FoliationRelation::NotTopEquivPositiveIntersection;
}

std::string to_string(FoliationRelation relation) {
    switch (relation) {
        case FoliationRelation::TopEquivAbsCont: return "TopEquivAbsCont";
        case FoliationRelation::TopEquivNotAbsCont: return "TopEquivNotAbsCont";
        case FoliationRelation::NotTopEquivZeroIntersection: return "NotTopEquivZeroIntersection";
        case FoliationRelation::NotTopEquivPositiveIntersection: return "NotTopEquivPositiveIntersection";
    }
    return "?";
}

}  // namespace strebel
