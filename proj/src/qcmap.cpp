#include "strebel/qcmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "strebel/errors.hpp"

namespace strebel {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

double round_to_half_grid(double x) {
    return std::round(2.0 * x) / 2.0;
}
}  // namespace

double QcMapConfig::delta_exponent() const {
    return M == 1.0 ? 0.5 : std::pow(M, X);
}

double QcMapConfig::limit_target() const {
    if (M == 1.0) return 1.0;
    const double e = delta_exponent();
    return M > 1.0 ? (M - e) / (1.0 - e) : (1.0 - e) / (M - e);
}

Complex QcMapConfig::psi(Complex z) const {
    // Polynomial tail sum_{d>=2} c_d z^d.
    Complex acc = 0.0;
    Complex zp = z * z;
    for (const Complex& coeff : psi_coeffs) {
        acc += coeff * zp;
        zp *= z;
    }
    return acc;
}

ExponentChoice choose_exponent(double M, double epsilon) {
    if (!(M > 0.0)) throw DomainError("modulus ratio must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");

    ExponentChoice out;
    if (M == 1.0) {
        out.X = 0.5;  // plays the role of the fixed exponent in Delta = delta^{1/2}
        out.limit_target = 1.0;
        return out;
    }
    if (M > 1.0) {
        // Admissible region X < log(eps/(M+eps-1))/log M < 0; pick the
        // midpoint of [bound-1, bound] rounded to the half-integer grid
        // (the rounding moves at most 1/4, so strictness is kept).
        const double bound = std::log(epsilon / (M + epsilon - 1.0)) / std::log(M);
        out.X = round_to_half_grid(bound - 0.5);
        const double e = std::pow(M, out.X);
        out.limit_target = (M - e) / (1.0 - e);
    } else {
        // Admissible region X > log(M eps/(1/M - 1 + eps))/log M > 2.
        const double bound = std::log(M * epsilon / (1.0 / M - 1.0 + epsilon)) / std::log(M);
        out.X = round_to_half_grid(bound + 0.5);
        const double e = std::pow(M, out.X);
        out.limit_target = (1.0 - e) / (M - e);
    }
    const double cap = std::max(M, 1.0 / M) + epsilon;
    if (!(out.limit_target < cap)) throw DomainError("exponent choice failed to meet the target cap");
    return out;
}

QcMapConfig make_config(double M, double m, double epsilon, Complex c,
                        std::vector<Complex> psi_coeffs) {
    if (!(m > 0.0)) throw DomainError("source modulus must be positive");
    if (c == Complex(0.0)) throw DomainError("leading coefficient must be nonzero");
    QcMapConfig config;
    config.M = M;
    config.m = m;
    config.epsilon = epsilon;
    config.X = choose_exponent(M, epsilon).X;
    config.c = c;
    config.psi_coeffs = std::move(psi_coeffs);
    // |psi(z)| <= sum |c_d| (2 Delta)^d <= (sum |c_d| 2^d) Delta^2 on the
    // evaluation disk |z| <= 2 Delta (with Delta <= 1).
    double C = 0.0;
    double pow2 = 4.0;
    for (const Complex& coeff : config.psi_coeffs) {
        C += std::abs(coeff) * pow2;
        pow2 *= 2.0;
    }
    config.psi_bound = C;
    return config;
}

Radii radii(const QcMapConfig& config, double t) {
    if (t < 0.0) throw NegativeTime("time must be nonnegative");
    Radii out;
    out.delta = std::exp(-std::exp(2.0 * t) * config.m * kPi);
    out.Delta = std::pow(out.delta, config.delta_exponent());
    return out;
}

AffineParams affine_params(const QcMapConfig& config, double t) {
    if (t < 0.0) throw NegativeTime("time must be nonnegative");
    // For M = 1 the pair (M, M^X) is replaced by (1, 1/2); the same
    // expressions then reproduce the special-case formulas.
    const double meff = config.M == 1.0 ? 1.0 : config.M;
    const double e = config.delta_exponent();
    const double scale = std::exp(2.0 * t) * config.m * kPi;
    AffineParams out;
    out.alpha = -std::arg(config.c) / (scale * (1.0 - e));
    out.beta = (meff - e + std::log(std::abs(config.c)) / scale) / (1.0 - e);
    return out;
}

double affine_dilatation(double alpha, double beta) {
    const double plus = std::hypot(1.0 + beta, alpha);
    const double minus = std::hypot(1.0 - beta, alpha);
    const double den = plus - minus;
    if (!(den > 0.0)) throw DegenerateMap("affine map is not orientation-preserving");
    return (plus + minus) / den;
}

bool threshold_met(const QcMapConfig& config, double t) {
    // delta^M < |c| delta^E  <=>  (M - E) e^{2t} m pi + log|c| > 0.
    const double meff = config.M == 1.0 ? 1.0 : config.M;
    const double e = config.delta_exponent();
    return (meff - e) * std::exp(2.0 * t) * config.m * kPi + std::log(std::abs(config.c)) > 0.0;
}

double validity_threshold(const QcMapConfig& config) {
    if (threshold_met(config, 0.0)) return 0.0;
    const double meff = config.M == 1.0 ? 1.0 : config.M;
    const double e = config.delta_exponent();
    const double lc = std::log(std::abs(config.c));
    return 0.5 * std::log(-lc / ((meff - e) * config.m * kPi));
}

Complex eval_F(const QcMapConfig& config, double t, Complex z) {
    if (!threshold_met(config, t))
        throw ValidityThresholdNotMet("time is below the construction threshold");
    const Radii r = radii(config, t);
    const double rho = std::abs(z);
    if (rho < r.delta * (1.0 - 1e-12) || rho >= 1.0)
        throw OutOfDomain("point lies outside the annulus");

    if (rho <= r.Delta) {
        // Radial stretch: Delta^{(1-M)/(1-E)} c^{1/(1-E) + log|z|/(log Delta - log delta)}
        //                 |z|^{-(1-M)/(1-E)} z.
        const double meff = config.M == 1.0 ? 1.0 : config.M;
        const double e = config.delta_exponent();
        const double p = (1.0 - meff) / (1.0 - e);
        const double s = 1.0 / (1.0 - e) + std::log(rho) / (std::log(r.Delta) - std::log(r.delta));
        const Complex cpow = std::exp(s * std::log(config.c));
        return std::pow(r.Delta, p) * cpow * std::pow(rho, -p) * z;
    }
    if (rho <= 2.0 * r.Delta) {
        const double phi = rho / r.Delta - 1.0;
        return config.c * z + phi * config.psi(z);
    }
    return config.c * z + config.psi(z);
}

DilatationReport dilatation_trajectory(const QcMapConfig& config,
                                       const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw DomainError("time grid must be nonempty");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("time grid must be increasing");

    DilatationReport report;
    report.limit_target = config.limit_target();
    const double abs_c = std::abs(config.c);
    for (double t : t_grid) {
        DilatationSample s;
        s.t = t;
        s.valid = threshold_met(config, t);
        if (s.valid && !report.first_valid_t) report.first_valid_t = t;

        if (s.valid) {
            const AffineParams ab = affine_params(config, t);
            s.k_affine = affine_dilatation(ab.alpha, ab.beta);
        }

        // Derivative bounds with |psi| <= C Delta^2: |dbar Q| <= C Delta / 2,
        // |d Q| >= |c| - C Delta / 2 - 2 C Delta.
        const double Delta = radii(config, t).Delta;
        const double num = abs_c + config.psi_bound * Delta / 2.0 + 2.0 * config.psi_bound * Delta;
        const double den = abs_c - config.psi_bound * Delta / 2.0 - 2.0 * config.psi_bound * Delta;
        s.k_interp_bound = den > 0.0 ? std::max(1.0, num / den)
                                     : std::numeric_limits<double>::infinity();

        s.k_total = std::max(s.k_affine, s.k_interp_bound);
        report.samples.push_back(s);
    }
    return report;
}

}  // namespace strebel
