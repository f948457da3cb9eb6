#include "strebel/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "strebel/errors.hpp"

namespace strebel {

double e_functional(const std::vector<double>& m, const std::vector<double>& i_values) {
    if (m.size() != i_values.size()) throw LengthMismatch("vector lengths differ");
    double sum = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0.0) throw NonPositiveEntry("moduli must be nonnegative");
        if (i_values[j] < 0.0) throw NonPositiveEntry("intersection values must be nonnegative");
        sum += m[j] * i_values[j] * i_values[j];
    }
    return std::sqrt(sum);
}

double sup_ratio(const std::vector<double>& m, const std::vector<double>& mp) {
    if (m.size() != mp.size()) throw LengthMismatch("vector lengths differ");
    if (m.empty()) throw LengthMismatch("vectors are empty");
    double best = 0.0;
    bool any = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0.0 || mp[j] < 0.0) throw NonPositiveEntry("moduli must be nonnegative");
        if (m[j] == 0.0 && mp[j] == 0.0) continue;  // index in Z, excluded
        if (m[j] == 0.0) return std::numeric_limits<double>::infinity();
        best = std::max(best, mp[j] / m[j]);
        any = true;
    }
    if (!any) throw AllZero("every index has both entries zero");
    return best;
}

std::optional<Rat> sup_ratio_exact(const std::vector<Rat>& m, const std::vector<Rat>& mp) {
    if (m.size() != mp.size() || m.empty()) throw LengthMismatch("vector lengths differ");
    std::optional<Rat> best;
    bool any = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == Rat(0) && mp[j] == Rat(0)) continue;
        if (m[j] == Rat(0)) return std::nullopt;  // +infinity
        const Rat r = mp[j] / m[j];
        if (!best || r > *best) best = r;
        any = true;
    }
    if (!any) throw AllZero("every index has both entries zero");
    return best;
}

double sup_ratio_oracle(const std::vector<double>& m, const std::vector<double>& mp,
                        std::size_t samples, std::uint64_t seed) {
    if (m.size() != mp.size()) throw LengthMismatch("vector lengths differ");
    if (m.empty()) throw LengthMismatch("vectors are empty");
    for (double v : m)
        if (!(v > 0.0)) throw NonPositiveEntry("oracle requires strictly positive denominators");

    const std::size_t k = m.size();
    auto ratio = [&](const std::vector<double>& x) {
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            num += mp[j] * x[j] * x[j];
            den += m[j] * x[j] * x[j];
        }
        return num / den;
    };

    double best = 0.0;
    std::vector<double> x(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        x.assign(k, 0.0);
        x[j] = 1.0;
        best = std::max(best, ratio(x));
    }

    // Uniform simplex samples via normalized exponentials.
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    for (std::size_t s = 0; s < samples; ++s) {
        double total = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            x[j] = expo(rng);
            total += x[j];
        }
        for (std::size_t j = 0; j < k; ++j) x[j] /= total;
        best = std::max(best, ratio(x));
    }
    return best;
}

double kerckhoff_lower_bound(const std::vector<double>& m, const std::vector<double>& mp,
                             const std::vector<std::vector<double>>& sample_curves) {
    if (m.size() != mp.size()) throw LengthMismatch("vector lengths differ");
    if (m.empty()) throw LengthMismatch("vectors are empty");
    if (sample_curves.empty()) throw EmptySample("sample list must be nonempty");
    for (double v : m)
        if (!(v > 0.0)) throw NonPositiveEntry("lower bound requires strictly positive denominators");

    const std::size_t k = m.size();
    double best = 0.0;
    auto consider = [&](const std::vector<double>& x) {
        const double e = e_functional(m, x);
        const double ep = e_functional(mp, x);
        if (e > 0.0) best = std::max(best, (ep * ep) / (e * e));
    };
    std::vector<double> coord(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        coord.assign(k, 0.0);
        coord[j] = 1.0;
        consider(coord);
    }
    for (const auto& x : sample_curves) {
        if (x.size() != k) throw LengthMismatch("sample vector length differs");
        consider(x);
    }
    return 0.5 * std::log(best);
}

Rat kerckhoff_coordinate_max_exact(const std::vector<Rat>& m, const std::vector<Rat>& mp) {
    if (m.size() != mp.size() || m.empty()) throw LengthMismatch("vector lengths differ");
    Rat best = mp[0] / m[0];
    for (std::size_t j = 1; j < m.size(); ++j) best = std::max(best, mp[j] / m[j]);
    return best;
}

LengthAreaBound length_area_bound(const CylinderSurface& surface,
                                  const std::vector<double>& i_values) {
    const std::size_t k = surface.cylinders.size();
    if (i_values.size() != k) throw LengthMismatch("intersection vector length differs");

    double crossing = 0.0, e2 = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (i_values[j] < 0.0) throw NonPositiveEntry("intersection values must be nonnegative");
        crossing += i_values[j] * surface.cylinders[j].height;
        e2 += surface.cylinders[j].modulus() * i_values[j] * i_values[j];
    }

    LengthAreaBound out;
    out.bound = crossing * crossing / surface.area();
    out.e_squared = e2;

    // Cauchy-Schwarz equality holds iff i_j sqrt(m_j) is proportional to
    // sqrt(a_j b_j), i.e. i_j = lambda a_j for all j.
    bool proportional = true;
    double lambda = 0.0;
    bool lambda_set = false;
    for (std::size_t j = 0; j < k; ++j) {
        const double r = i_values[j] / surface.cylinders[j].circumference;
        if (!lambda_set) {
            lambda = r;
            lambda_set = true;
        } else if (std::abs(r - lambda) > kTol * std::max(1.0, lambda)) {
            proportional = false;
        }
    }
    out.equality = proportional;
    return out;
}

double scaled_core_extremal_bound(const CylinderSurface& surface, double t, std::size_t j) {
    if (j >= surface.cylinders.size()) throw IndexError("cylinder index out of range");
    if (t < 0.0) throw NegativeTime("time must be nonnegative");
    return std::exp(-2.0 * t) / surface.cylinders[j].modulus();
}

}  // namespace strebel
