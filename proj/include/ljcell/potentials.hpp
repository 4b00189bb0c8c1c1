#pragma once

#include <string>
#include <vector>

namespace ljcell {

/// Dimensionless model parameters. Energies are in units of the well depth,
/// lengths in units of the equilibrium spacing, times in sqrt(m a^2 / U0).
struct PotentialSpec {
    double alpha = 12.0;   ///< repulsive exponent
    double beta = 6.0;     ///< attractive exponent
    double amp = 0.01;     ///< drive amplitude alpha_1 of eps(t) = amp*cos(omega1*t)
    double omega1 = 30.0;  ///< drive frequency
};

/// Throws ArgumentError unless alpha > beta > 0, |amp| < 1 and omega1 > 0.
void validate(const PotentialSpec& spec);

/// Non-fatal validity flags (|amp| > 0.2 lies outside the small-amplitude expansion).
std::vector<std::string> validity_warnings(const PotentialSpec& spec);

inline constexpr double kAmplitudeWarningThreshold = 0.2;

/// W(q) ~ w0 + b q^2 + c q^4 near the cell centre.
struct QuarticCoefficients {
    double w0;
    double b;
    double c;

    double operator()(double q) const { return w0 + q * q * (b + c * q * q); }
};

/// Pair potential U(r) = r^-alpha - (alpha/beta) r^-beta; minimum -1 at r = 1.
double lj(const PotentialSpec& spec, double r);

/// k-th derivative of lj, k in 1..4.
double lj_deriv(const PotentialSpec& spec, double r, int order);

/// U(r + dr) - U(r) without cancellation for small dr.
double lj_increment(const PotentialSpec& spec, double r, double dr);

/// Unperturbed cell potential W(q) = U(1+q) + U(1-q) on (-1, 1).
double wall_potential(const PotentialSpec& spec, double q);

/// k-th derivative of wall_potential, k in 1..4.
double wall_deriv(const PotentialSpec& spec, double q, int order);

/// W(q0) - W(q) evaluated from power-law increments, so the result keeps full
/// relative accuracy when q is close to q0 or both are close to the centre.
double energy_gap(const PotentialSpec& spec, double q0, double q);

/// W(y + d) - W(y) from power-law increments; y and y + d inside the cell.
double energy_rise(const PotentialSpec& spec, double y, double d);

QuarticCoefficients quartic_coefficients(const PotentialSpec& spec);

/// High-energy model (1 - q)^-alpha, valid for 0 <= q < 1.
double hard_wall_potential(const PotentialSpec& spec, double q);

/// Small-oscillation frequency sqrt(W''(0)) = sqrt(2 U''(1)).
double well_bottom_frequency(const PotentialSpec& spec);

}  // namespace ljcell
