#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strebel/rational.hpp"

namespace strebel {

inline constexpr double kTol = 1e-12;

enum class Side { Top, Bottom };

// One flat cylinder of the decomposition: circumference a (horizontal
// length) and height b (vertical extent).  modulus = b / a.
struct Cylinder {
    double circumference = 0.0;
    double height = 0.0;

    double modulus() const { return height / circumference; }
};

// A maximal gluing segment on a horizontal boundary of a cylinder.
// Offsets live in [0, a); each side of each cylinder is tiled by its
// segments.
struct Segment {
    std::size_t cylinder = 0;
    Side side = Side::Bottom;
    double offset = 0.0;
    double length = 0.0;
};

// pairing is a fixed-point-free involution on segment indices; flipped[i]
// tells whether the identification reverses orientation (z -> -z + c).
struct GluingTable {
    std::vector<Segment> segments;
    std::vector<std::size_t> pairing;
    std::vector<bool> flipped;
};

// Optional exact mirror of the numeric data, attached when every input
// was given as a rational literal.  Validation then runs in exact
// arithmetic instead of with tolerance kTol.
struct ExactSurfaceData {
    std::vector<Rat> circumference;
    std::vector<Rat> height;
    std::vector<Rat> seg_offset;
    std::vector<Rat> seg_length;
};

struct CylinderSurface {
    std::vector<Cylinder> cylinders;
    GluingTable gluing;
    std::optional<ExactSurfaceData> exact;

    double area() const;
    bool is_unit_norm(double tol = kTol) const;
    std::optional<std::vector<Rat>> exact_moduli() const;
};

// Validates all invariants (positivity, side partitions, involution,
// paired-length equality) and returns the surface.  Exact data, when
// supplied, must mirror the double data and is used for the partition and
// pairing checks.
CylinderSurface build_surface(std::vector<Cylinder> cylinders, GluingTable gluing,
                              std::optional<ExactSurfaceData> exact = std::nullopt);

std::vector<double> moduli_vector(const CylinderSurface& surface);

// A labeled curve family with its geometric intersection pairing.  The
// pairing matrix is input data: symmetric, nonnegative, zero diagonal.
struct CurveFamily {
    std::vector<std::string> names;
    std::vector<std::vector<double>> pairing;

    std::size_t size() const { return names.size(); }
};

std::shared_ptr<const CurveFamily> make_family(std::vector<std::string> names,
                                               std::vector<std::vector<double>> pairing);

// Weighted multicurve over a shared family; weights >= 0, all-zero is the
// zero foliation.
struct MeasuredMulticurve {
    std::shared_ptr<const CurveFamily> family;
    std::vector<double> weights;

    std::vector<std::size_t> support() const;
};

MeasuredMulticurve make_multicurve(std::shared_ptr<const CurveFamily> family,
                                   std::vector<double> weights);

// Bilinear extension of the pairing: sum_{j,j'} mu_j nu_{j'} I[j][j'].
double intersection_number(const MeasuredMulticurve& mu, const MeasuredMulticurve& nu);

enum class FoliationRelation {
    TopEquivAbsCont,
    TopEquivNotAbsCont,
    NotTopEquivZeroIntersection,
    NotTopEquivPositiveIntersection,
};

// Relation of two weighted multicurves over the same family.  In this
// model a foliation's topological type is its support, so the operation
// returns TopEquivAbsCont when the supports coincide and are pairwise
// disjoint; TopEquivNotAbsCont only arises for foliations with ergodic
// components, which are represented by classifier flags, never by
// multicurve data.
FoliationRelation foliation_relation(const MeasuredMulticurve& h, const MeasuredMulticurve& hp);

std::string to_string(FoliationRelation relation);

}  // namespace strebel
