#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ljcell/potentials.hpp"

namespace ljcell {

/// Phase point of the driven cell. Walls sit at q = -1 and q = 1 + eps(t),
/// eps(t) = amp * cos(omega1 * t + drive_phase).
struct PhaseState {
    double q = 0.0;
    double p = 0.0;
    double t = 0.0;
};

/// Stroboscopic sample at t_k = t_0 + 2 pi k / omega1.
struct SectionPoint {
    std::size_t k = 0;
    double t = 0.0;
    double q = 0.0;
    double p = 0.0;
};

struct PoincareSection {
    std::vector<SectionPoint> points;
    std::size_t steps_per_period = 0;
    double dt = 0.0;
    std::string error;  ///< non-empty when a step failed and the section stops early
    bool truncated() const { return !error.empty(); }
};

inline constexpr int kMaxStepHalvings = 40;
inline constexpr std::size_t kMinStepsPerPeriod = 1000;

/// Wall displacement eps(t).
double drive(const PotentialSpec& spec, double t, double drive_phase = 0.0);

/// -dV/dq = -U'(q + 1) + U'(1 + eps(t) - q); DomainError outside the cell.
double force(const PotentialSpec& spec, double q, double t, double drive_phase = 0.0);

/// Unperturbed energy p^2/2 + W(q).
double unperturbed_energy(const PotentialSpec& spec, double q, double p);

/// Kick-drift-kick step with the force frozen at the midpoint time. A step
/// whose drift leaves the cell is replaced by two half steps, recursively,
/// up to kMaxStepHalvings levels; beyond that DomainError. Negative dt
/// integrates backwards.
PhaseState step(const PotentialSpec& spec, const PhaseState& state, double dt,
                double drive_phase = 0.0);

/// One sample per drive period, starting with the initial state (k = 0).
/// dt = (2 pi / omega1) / steps_per_period exactly.
PoincareSection poincare_section(const PotentialSpec& spec, const PhaseState& initial,
                                 std::size_t n_periods,
                                 std::size_t steps_per_period = kMinStepsPerPeriod,
                                 double drive_phase = 0.0);

/// Unperturbed action I of the orbit through (q, p).
double point_action(const PotentialSpec& spec, double q, double p);

/// max - min of the unperturbed action over the section points.
double action_spread(const PotentialSpec& spec, const std::vector<SectionPoint>& section);

}  // namespace ljcell
