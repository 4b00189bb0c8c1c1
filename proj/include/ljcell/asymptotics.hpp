#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ljcell/potentials.hpp"
#include "ljcell/specfun.hpp"

namespace ljcell {

/// Quartic-model orbit at small energy above the well bottom.
struct SmallEnergyAsymptote {
    double h = 0.0;
    double t1 = 0.0;        ///< turning amplitude of w0 + b q^2 + c q^4
    double a2 = 0.0;        ///< A^2, the complementary root magnitude
    double k = 0.0;         ///< elliptic modulus, k^2 = T1^2 / (T1^2 + A^2)
    double period = 0.0;    ///< exact quartic-model period
    double omega = 0.0;     ///< 2 pi / period
    double omega_leading = 0.0;  ///< sqrt(2 b)
    double domega_de = 0.0;      ///< leading-order slope 3c / (2 sqrt(2) b^(3/2))
};

SmallEnergyAsymptote small_e_asymptote(const PotentialSpec& spec, double h);

/// Leading-order domega/dE at the well bottom, 3c / (2 sqrt(2) b^(3/2)).
double small_e_domega_de(const PotentialSpec& spec);

/// The alternative closed form U''''(1) / (4 sqrt(2 U''(1))), kept
/// for side-by-side reporting; it is not dimensionally a frequency slope.
double small_e_domega_de_alternative(const PotentialSpec& spec);

/// |K_{2,1}| ~ (1/omega1) sqrt(amp/2 * sqrt(h U''(1)) * U''''(1) / (8 U''(1))).
/// h is the energy of the n = 1 resonance; omega1 defaults to 2 sqrt(2b).
double k21_small(const PotentialSpec& spec, double h, std::optional<double> omega1 = {});

/// |K_{3,2}| ~ (3/omega1) sqrt(amp/2 * h * U'''(1)/(32 U''(1)) * U''''(1)/U''(1)),
/// magnitude taken under the root. omega1 defaults to 3 sqrt(2b).
double k32_small(const PotentialSpec& spec, double h, std::optional<double> omega1 = {});

/// Symmetric hard-wall model (1 - |q|)^-alpha at energy e.
struct HighEnergyAsymptote {
    double e = 0.0;
    double q1_big = 0.0;     ///< turning point, e (1 - Q1)^alpha = 1
    double j_big = 0.0;      ///< (2/pi) * integral of p_big over [0, Q1]
    double omega_big = 0.0;  ///< dE/dJ_big by central differences
    double domega_big_de = 0.0;
    double hn_limit_magnitude = 0.0;  ///< (1 + 2^-alpha) / 2

    /// H_n / E in the high-energy limit, -(-1)^n (1 + 2^-alpha) / 2.
    double hn_limit(int n) const;
};

inline constexpr double kHighEnergyThreshold = 1e2;

/// Throws RegimeError for e <= kHighEnergyThreshold.
HighEnergyAsymptote high_e_action(const PotentialSpec& spec, double e);

/// Hard-wall turning point Q1 = 1 - e^(-1/alpha).
double hard_wall_turning_point(const PotentialSpec& spec, double e);

/// J_big alone, (2/pi) * integral of sqrt(2 (e - (1 - q)^-alpha)) over [0, Q1].
double hard_wall_action(const PotentialSpec& spec, double e, const QuadratureOptions& opts = {});

/// pi / (2 * integral of dq / p_big over [0, Q1]); the quadrature route to
/// the frequency that HighEnergyAsymptote::omega_big takes by differences.
double hard_wall_frequency(const PotentialSpec& spec, double e, const QuadratureOptions& opts = {});

/// Angle of the hard-wall orbit at coordinate q, zero at the turning point.
double hard_wall_angle(const PotentialSpec& spec, double e, double q);

/// Predicted decay exponents of the exact-minus-hard-wall differences.
struct ScalingExponents {
    double action;     ///< 1/2 + (1 - beta)/alpha
    double frequency;  ///< 3/2 + (1 - beta)/alpha
    double slope;      ///< 5/2 + (1 - beta)/alpha
    double phase;      ///< 1 + (1 - beta)/alpha
};

ScalingExponents scaling_exponents(const PotentialSpec& spec);

struct ScalingRow {
    double e = 0.0;
    double q0 = 0.0;          ///< exact turning point
    double action_diff = 0.0; ///< I - J_big
    double freq_diff = 0.0;   ///< omega - Omega_big
    double inverse_freq_diff = 0.0;  ///< 1/Omega_big - 1/omega = d(I - J_big)/dE
    double slope_diff = 0.0;  ///< domega/dE - dOmega_big/dE
    double phase_diff = 0.0;  ///< max over the quarter orbit of |phi - phi_big|
    // Each difference multiplied by E to its predicted exponent.
    double scaled_action = 0.0;
    double scaled_freq = 0.0;
    double scaled_inverse_freq = 0.0;
    double scaled_slope = 0.0;
    double scaled_phase = 0.0;
};

struct ScalingReport {
    ScalingExponents exponents{};
    std::vector<ScalingRow> rows;
    /// max/min of |scaled value| over the grid, per column.
    double action_spread = 0.0;
    double freq_spread = 0.0;
    double inverse_freq_spread = 0.0;
    double slope_spread = 0.0;
    double phase_spread = 0.0;
    /// Columns whose spread exceeds bounded_factor.
    std::vector<const char*> unbounded;
    double bounded_factor = 3.0;
};

/// Requires alpha > 2 (beta - 1) (RegimeError otherwise) and every grid
/// energy above kHighEnergyThreshold.
ScalingReport high_e_scaling_report(const PotentialSpec& spec, std::span<const double> e_grid);

/// Leading high-energy H_n, -E (-1)^n (1 + 2^-alpha) / 2.
double hn_high(const PotentialSpec& spec, double e, int n);

/// Energy-independent overlap plateau sqrt(amp/2 (1 + 2^-alpha)) (n - 1/2), n >= 2.
double k_high(const PotentialSpec& spec, int n);

}  // namespace ljcell
