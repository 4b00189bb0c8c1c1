#pragma once

#include "ljcell/potentials.hpp"
#include "ljcell/specfun.hpp"

namespace ljcell {

/// One unperturbed orbit of H0 = p^2/2 + W(q), labelled by its right turning point.
struct OrbitRecord {
    double q0 = 0.0;         ///< right turning point, 0 < q0 < 1
    double e = 0.0;          ///< E = W(q0)
    double h = 0.0;          ///< H = E - W0, formed without cancellation
    double action = 0.0;     ///< I
    double omega = 0.0;      ///< dE/dI
    double domega_de = 0.0;
    double domega_di = 0.0;  ///< omega * domega_de
    bool accuracy_warning = false;
};

struct TurningPoints {
    double left;
    double right;
};

/// Turning points of the orbit with total energy e; throws DomainError for e <= W0.
TurningPoints turning_points(const PotentialSpec& spec, double e);

/// Energy above the well bottom, W(q0) - W(0).
double height(const PotentialSpec& spec, double q0);

/// Inverse of height(): the amplitude whose orbit sits h above the well bottom.
double amplitude_for_height(const PotentialSpec& spec, double h);

/// p(q0, q) = sqrt(2 (W(q0) - W(q))) for |q| <= q0.
double momentum(const PotentialSpec& spec, double q0, double q);

/// Time from the centre to the turning point, the integral of dq/p over [0, q0].
double quarter_period(const PotentialSpec& spec, double q0, const QuadratureOptions& opts = {});

/// I(q0) = (2/pi) * integral of p over [0, q0].
double action(const PotentialSpec& spec, double q0, const QuadratureOptions& opts = {});

/// omega(q0) = pi / (2 * quarter_period).
double frequency(const PotentialSpec& spec, double q0, const QuadratureOptions& opts = {});

/// Outgoing: p <= 0, the half orbit q0 -> -q0, angle in [0, pi].
/// Returning: p > 0, the half orbit -q0 -> q0, angle in (pi, 2 pi).
enum class Branch { Outgoing, Returning };

/// Angle variable with phi = 0 at the right turning point, advancing with time.
double angle(const PotentialSpec& spec, double q0, double q, Branch branch = Branch::Outgoing,
             const QuadratureOptions& opts = {});

struct FrequencySlope {
    double domega_de = 0.0;
    double domega_di = 0.0;
    double abs_error = 0.0;  ///< Richardson error estimate on domega_de
    bool accuracy_warning = false;
};

/// domega/dI = omega * domega/dE, with domega/dE from Richardson-extrapolated
/// central differences of the frequency in the energy above the well bottom.
FrequencySlope domega_di(const PotentialSpec& spec, double q0);

OrbitRecord orbit_record(const PotentialSpec& spec, double q0);

}  // namespace ljcell
