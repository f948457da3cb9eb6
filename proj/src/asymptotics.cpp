#include "strebel/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "strebel/errors.hpp"

namespace strebel {

namespace {

void check_positive_pair(const std::vector<double>& m, const std::vector<double>& mp) {
    if (m.size() != mp.size()) throw LengthMismatch("moduli vectors have different lengths");
    if (m.empty()) throw LengthMismatch("moduli vectors are empty");
    for (std::size_t j = 0; j < m.size(); ++j)
        if (!(m[j] > 0.0) || !(mp[j] > 0.0))
            throw NonPositiveEntry("moduli must be strictly positive");
}

double max_ratio(const std::vector<double>& num, const std::vector<double>& den) {
    double best = 0.0;
    for (std::size_t j = 0; j < num.size(); ++j) best = std::max(best, num[j] / den[j]);
    return best;
}

}  // namespace

double limit_distance(const std::vector<double>& m, const std::vector<double>& mp) {
    check_positive_pair(m, mp);
    return 0.5 * std::log(std::max(max_ratio(mp, m), max_ratio(m, mp)));
}

double shifted_limit(const std::vector<double>& m, const std::vector<double>& mp, double s) {
    check_positive_pair(m, mp);
    const double f = std::exp(2.0 * s);
    std::vector<double> shifted(mp);
    for (double& v : shifted) v *= f;
    return limit_distance(m, shifted);
}

std::optional<ModularEquivalence> modular_equivalence(const std::vector<double>& m,
                                                      const std::vector<double>& mp) {
    check_positive_pair(m, mp);
    const double lambda = mp[0] / m[0];
    for (std::size_t j = 1; j < m.size(); ++j)
        if (std::abs(mp[j] / m[j] - lambda) > kTol * lambda) return std::nullopt;
    return ModularEquivalence{lambda, -0.5 * std::log(lambda)};
}

std::optional<Rat> modular_equivalence_exact(const std::vector<Rat>& m, const std::vector<Rat>& mp) {
    if (m.size() != mp.size() || m.empty()) throw LengthMismatch("moduli vectors have different lengths");
    const Rat lambda = mp[0] / m[0];
    for (std::size_t j = 1; j < m.size(); ++j)
        if (mp[j] / m[j] != lambda) return std::nullopt;
    return lambda;
}

OptimalShift optimal_shift(const std::vector<double>& m, const std::vector<double>& mp) {
    check_positive_pair(m, mp);
    const double up = max_ratio(mp, m);    // max m'_j / m_j
    const double down = max_ratio(m, mp);  // max m_j / m'_j
    OptimalShift out;
    out.beta = 0.25 * std::log(down / up);
    // At the optimum the two one-sided maxima coincide, each equal to
    // sqrt(up * down), so the value is half the detour metric.
    out.min_value = 0.25 * std::log(up * down);
    if (out.min_value < 0.0) out.min_value = 0.0;
    return out;
}

double detour_metric(const std::vector<double>& m, const std::vector<double>& mp) {
    if (m.size() != mp.size()) throw LengthMismatch("moduli vectors have different lengths");
    if (m.empty()) throw LengthMismatch("moduli vectors are empty");
    double up = 0.0, down = 0.0;
    bool any = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0.0 || mp[j] < 0.0) throw NonPositiveEntry("moduli must be nonnegative");
        if (m[j] == 0.0 && mp[j] == 0.0) continue;  // outside both supports
        if (m[j] == 0.0 || mp[j] == 0.0)            // supports differ: not absolutely continuous
            return std::numeric_limits<double>::infinity();
        up = std::max(up, mp[j] / m[j]);
        down = std::max(down, m[j] / mp[j]);
        any = true;
    }
    if (!any) throw AllZero("both vectors are identically zero");
    return 0.5 * std::log(up) + 0.5 * std::log(down);
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Bounded: return "Bounded";
        case Outcome::Divergent: return "Divergent";
        case Outcome::Asymptotic: return "Asymptotic";
        case Outcome::BoundedNotAsymptotic: return "BoundedNotAsymptotic";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

Verdict classify(const PairDescriptor& d) {
    if (d.modularly_equivalent && d.relation != FoliationRelation::TopEquivAbsCont)
        throw InconsistentFlags("modular equivalence requires absolutely continuous foliations");

    switch (d.relation) {
        case FoliationRelation::NotTopEquivPositiveIntersection:
            return {Outcome::Divergent, cite::kIvanov};
        case FoliationRelation::NotTopEquivZeroIntersection:
            return {Outcome::Divergent, cite::kLenzhenMasur};
        case FoliationRelation::TopEquivNotAbsCont:
            return {Outcome::Divergent, cite::kLenzhenMasur};
        case FoliationRelation::TopEquivAbsCont:
            break;
    }

    if (d.jenkins_strebel()) {
        if (d.modularly_equivalent && d.endpoints_equal)
            return {Outcome::Asymptotic, cite::kAsymptotic};
        return {Outcome::BoundedNotAsymptotic, cite::kAsymptotic};
    }
    if (d.uniquely_ergodic && !d.critical_graph_has_closed_loops)
        return {Outcome::Asymptotic, cite::kMasur};
    return {Outcome::Unknown, cite::kUnknown};
}

}  // namespace strebel
