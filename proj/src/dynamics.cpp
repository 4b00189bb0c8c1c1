#include "ljcell/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ljcell/action_angle.hpp"
#include "ljcell/errors.hpp"

namespace ljcell {

namespace {

constexpr QuadratureOptions kActionQuadrature{1e-12, 0.0, 400000};

bool inside(const PotentialSpec& spec, double q, double t, double drive_phase) {
    return q > -1.0 && q < 1.0 + drive(spec, t, drive_phase);
}

PhaseState advance(const PotentialSpec& spec, const PhaseState& s, double dt, double drive_phase,
                   int depth) {
    const double t_mid = s.t + 0.5 * dt;
    const double p_half = s.p + 0.5 * dt * force(spec, s.q, t_mid, drive_phase);
    const double q_new = s.q + dt * p_half;
    if (inside(spec, q_new, t_mid, drive_phase)) {
        const double p_new = p_half + 0.5 * dt * force(spec, q_new, t_mid, drive_phase);
        if (std::isfinite(p_new))
            return {q_new, p_new, s.t + dt};
    }
    if (depth >= kMaxStepHalvings) {
        std::ostringstream msg;
        msg << "step crossed a wall at t = " << s.t << " after " << kMaxStepHalvings
            << " halvings";
        throw DomainError(msg.str());
    }
    const PhaseState half = advance(spec, s, 0.5 * dt, drive_phase, depth + 1);
    PhaseState out = advance(spec, half, 0.5 * dt, drive_phase, depth + 1);
    out.t = s.t + dt;
    return out;
}

}  // namespace

double drive(const PotentialSpec& spec, double t, double drive_phase) {
    return spec.amp * std::cos(spec.omega1 * t + drive_phase);
}

double force(const PotentialSpec& spec, double q, double t, double drive_phase) {
    const double eps = drive(spec, t, drive_phase);
    if (!(q > -1.0) || !(q < 1.0 + eps)) {
        std::ostringstream msg;
        msg << "coordinate " << q << " touches a wall (cell is (-1, " << 1.0 + eps << "))";
        throw DomainError(msg.str());
    }
    return -lj_deriv(spec, 1.0 + q, 1) + lj_deriv(spec, 1.0 + eps - q, 1);
}

double unperturbed_energy(const PotentialSpec& spec, double q, double p) {
    return 0.5 * p * p + wall_potential(spec, q);
}

PhaseState step(const PotentialSpec& spec, const PhaseState& state, double dt,
                double drive_phase) {
    if (!(dt != 0.0) || !std::isfinite(dt))
        throw ArgumentError("time step must be finite and nonzero");
    return advance(spec, state, dt, drive_phase, 0);
}

PoincareSection poincare_section(const PotentialSpec& spec, const PhaseState& initial,
                                 std::size_t n_periods, std::size_t steps_per_period,
                                 double drive_phase) {
    validate(spec);
    if (steps_per_period < kMinStepsPerPeriod) {
        std::ostringstream msg;
        msg << "steps per drive period must be at least " << kMinStepsPerPeriod << ", got "
            << steps_per_period;
        throw ArgumentError(msg.str());
    }
    if (!inside(spec, initial.q, initial.t, drive_phase))
        throw DomainError("initial coordinate lies outside the cell");

    const double period = 2.0 * std::numbers::pi / spec.omega1;
    PoincareSection out;
    out.steps_per_period = steps_per_period;
    out.dt = period / static_cast<double>(steps_per_period);
    out.points.reserve(n_periods + 1);
    out.points.push_back({0, initial.t, initial.q, initial.p});

    PhaseState s = initial;
    try {
        for (std::size_t k = 1; k <= n_periods; ++k) {
            for (std::size_t j = 0; j < steps_per_period; ++j)
                s = advance(spec, s, out.dt, drive_phase, 0);
            // Sample times come from the period count, so rounding never accumulates.
            s.t = initial.t + static_cast<double>(k) * period;
            out.points.push_back({k, s.t, s.q, s.p});
        }
    } catch (const DomainError& err) {
        out.error = err.what();
    }
    return out;
}

double point_action(const PotentialSpec& spec, double q, double p) {
    if (!(std::abs(q) < 1.0)) {
        std::ostringstream msg;
        msg << "section point q = " << q << " lies outside the unperturbed cell";
        throw DomainError(msg.str());
    }
    const double h = 0.5 * p * p + energy_gap(spec, q, 0.0);
    if (h == 0.0)
        return 0.0;
    return action(spec, amplitude_for_height(spec, h), kActionQuadrature);
}

double action_spread(const PotentialSpec& spec, const std::vector<SectionPoint>& section) {
    if (section.empty())
        throw ArgumentError("action spread needs at least one section point");
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& pt : section) {
        const double i = point_action(spec, pt.q, pt.p);
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    return hi - lo;
}

}  // namespace ljcell
