#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strebel/rational.hpp"
#include "strebel/surface.hpp"

namespace strebel {

// E(mu) = (sum_j m_j i(gamma_j, mu)^2)^{1/2}, the limit functional
// lim e^{-2t} ext_{r(t)}(mu) = E(mu)^2 evaluated on given intersection
// numbers i_j = i(gamma_j, mu).
double e_functional(const std::vector<double>& m, const std::vector<double>& i_values);

// sup over test foliations of E'(mu)^2 / E(mu)^2 in closed form:
// max over indices (outside the set where both vectors vanish) of m'_j/m_j,
// +infinity when some m_j = 0 < m'_j.  Throws AllZero when every index has
// both entries zero.
double sup_ratio(const std::vector<double>& m, const std::vector<double>& mp);

// Exact closed form on rational vectors; nullopt encodes +infinity.
std::optional<Rat> sup_ratio_exact(const std::vector<Rat>& m, const std::vector<Rat>& mp);

// Independent oracle: maximizes the diagonal-form ratio over the k
// coordinate vectors plus `samples` seeded draws from the unit simplex.
// Coordinate attainment makes this equal to the closed form.
double sup_ratio_oracle(const std::vector<double>& m, const std::vector<double>& mp,
                        std::size_t samples, std::uint64_t seed);

// (1/2) log of the max of E'^2/E^2 over the supplied sample foliations and
// the coordinate vectors (always included).  A lower bound for the
// one-sided distance term (1/2) log sup_ratio, with equality guaranteed by
// the coordinate vectors.
double kerckhoff_lower_bound(const std::vector<double>& m, const std::vector<double>& mp,
                             const std::vector<std::vector<double>>& sample_curves);

// Exact max of E'^2/E^2 over the coordinate vectors (the value whose half
// log kerckhoff_lower_bound returns when only coordinate vectors are used).
Rat kerckhoff_coordinate_max_exact(const std::vector<Rat>& m, const std::vector<Rat>& mp);

struct LengthAreaBound {
    double bound = 0.0;      // (sum_j i_j b_j)^2 / area, the flat-metric ratio
    double e_squared = 0.0;  // sum_j m_j i_j^2
    bool equality = false;   // Cauchy-Schwarz equality: i proportional to a
};

LengthAreaBound length_area_bound(const CylinderSurface& surface,
                                  const std::vector<double>& i_values);

// Upper bound e^{-2t}/m_j for the extremal length of the j-th core curve
// at time t (reciprocal of the embedded annulus modulus e^{2t} m_j).
double scaled_core_extremal_bound(const CylinderSurface& surface, double t, std::size_t j);

}  // namespace strebel
