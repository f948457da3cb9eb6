#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strebel/rational.hpp"
#include "strebel/surface.hpp"

namespace strebel {

// Limit of the distance between the two rays once they share an endpoint:
// (1/2) log max_j max(m'_j/m_j, m_j/m'_j).  Pure arithmetic; the caller is
// responsible for the endpoint/absolute-continuity hypotheses.
double limit_distance(const std::vector<double>& m, const std::vector<double>& mp);

// limit_distance(m, e^{2s} m'): the limit after shifting the initial point
// of the second ray by s.
double shifted_limit(const std::vector<double>& m, const std::vector<double>& mp, double s);

struct ModularEquivalence {
    double lambda = 1.0;  // m'_j = lambda m_j for all j
    double alpha = 0.0;   // -(1/2) log lambda, the shift making the rays asymptotic
};

// Nonempty iff m'_j/m_j is constant (exact in the rational overload,
// relative tolerance kTol in the double one).
std::optional<ModularEquivalence> modular_equivalence(const std::vector<double>& m,
                                                      const std::vector<double>& mp);
std::optional<Rat> modular_equivalence_exact(const std::vector<Rat>& m,
                                             const std::vector<Rat>& mp);

struct OptimalShift {
    double beta = 0.0;       // (1/4) log( max_j(m_j/m'_j) / max_j(m'_j/m_j) )
    double min_value = 0.0;  // shifted_limit at beta = detour_metric / 2
};

OptimalShift optimal_shift(const std::vector<double>& m, const std::vector<double>& mp);

// (1/2) log max_j(m'_j/m_j) + (1/2) log max_j(m_j/m'_j).  Zero entries are
// allowed and encode failure of absolute continuity: +infinity when the
// supports differ.  Indices where both vanish are ignored.
double detour_metric(const std::vector<double>& m, const std::vector<double>& mp);

enum class Outcome { Bounded, Divergent, Asymptotic, BoundedNotAsymptotic, Unknown };

std::string to_string(Outcome outcome);

// Flags describing a pair of rays, one branch of the classification
// tables.  Flags that only matter on one branch may be left false.
struct PairDescriptor {
    FoliationRelation relation = FoliationRelation::TopEquivAbsCont;
    bool jenkins_strebel_first = false;
    bool jenkins_strebel_second = false;
    bool uniquely_ergodic = false;
    bool critical_graph_has_closed_loops = false;
    bool modularly_equivalent = false;
    bool endpoints_equal = false;

    bool jenkins_strebel() const { return jenkins_strebel_first && jenkins_strebel_second; }
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string citation;
};

// Citation keys attached to produced values.
namespace cite {
inline constexpr const char* kLimit = "Thm-main";
inline constexpr const char* kDetour = "Walsh12-detour";
inline constexpr const char* kOptimalShift = "Prop-optimal-shift";
inline constexpr const char* kAsymptotic = "Cor-asymptotic";
inline constexpr const char* kIvanov = "Ivanov01";
inline constexpr const char* kLenzhenMasur = "LenMas10";
inline constexpr const char* kMasur = "Masur80";
inline constexpr const char* kUnknown = "open";
}  // namespace cite

// Decision tree of the classification tables; throws InconsistentFlags on
// descriptors that do not lie on any branch.
Verdict classify(const PairDescriptor& d);

}  // namespace strebel
