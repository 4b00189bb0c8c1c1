#include "ljcell/action_angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail/roots.hpp"
#include "ljcell/errors.hpp"

namespace ljcell {

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerance for frequencies that feed finite differences.
constexpr QuadratureOptions kTightQuadrature{1e-13, 0.0, 400000};

void require_amplitude(double q0) {
    if (!(q0 > 0.0) || !(q0 < 1.0)) {
        std::ostringstream msg;
        msg << "orbit amplitude must satisfy 0 < q0 < 1, got " << q0;
        throw DomainError(msg.str());
    }
}

void require_allowed(double q0, double q) {
    if (!(std::abs(q) <= q0)) {
        std::ostringstream msg;
        msg << "coordinate " << q << " is classically forbidden for amplitude " << q0;
        throw DomainError(msg.str());
    }
}

// Integral of dq/p over [lo, q0]; the endpoint q0 is a turning point.
double time_to_turning_point(const PotentialSpec& spec, double q0, double lo,
                             const QuadratureOptions& opts) {
    if (lo >= q0)
        return 0.0;
    const GapIntegrand inverse_momentum = [&](double, double, double from_right) {
        return 1.0 / std::sqrt(2.0 * energy_rise(spec, q0 - from_right, from_right));
    };
    return integrate_sqrt_singular(inverse_momentum, lo, q0, SingularEnds::Right, opts).value;
}

}  // namespace

double height(const PotentialSpec& spec, double q0) {
    return energy_gap(spec, q0, 0.0);
}

double amplitude_for_height(const PotentialSpec& spec, double h) {
    if (!(h > 0.0)) {
        std::ostringstream msg;
        msg << "no motion: energy must exceed the well bottom, got height " << h;
        throw DomainError(msg.str());
    }
    if (!std::isfinite(h))
        throw DomainError("energy above the well bottom must be finite");

    auto residual = [&](double q) { return height(spec, q) - h; };
    double hi = 0.5;
    double fhi = residual(hi);
    while (fhi < 0.0) {
        const double next = 1.0 - 0.5 * (1.0 - hi);
        if (next >= 1.0)
            throw DomainError("energy too large to locate a turning point inside the cell");
        hi = next;
        fhi = residual(hi);
    }
    return detail::solve_bracketed(residual, 0.0, hi, -h, fhi);
}

TurningPoints turning_points(const PotentialSpec& spec, double e) {
    const double w0 = 2.0 * lj(spec, 1.0);
    const double q = amplitude_for_height(spec, e - w0);
    return {-q, q};
}

double momentum(const PotentialSpec& spec, double q0, double q) {
    require_amplitude(q0);
    require_allowed(q0, q);
    return std::sqrt(2.0 * energy_gap(spec, q0, q));
}

double quarter_period(const PotentialSpec& spec, double q0, const QuadratureOptions& opts) {
    require_amplitude(q0);
    return time_to_turning_point(spec, q0, 0.0, opts);
}

double action(const PotentialSpec& spec, double q0, const QuadratureOptions& opts) {
    require_amplitude(q0);
    const GapIntegrand p = [&](double, double, double from_right) {
        return std::sqrt(2.0 * energy_rise(spec, q0 - from_right, from_right));
    };
    return 2.0 / kPi * integrate_sqrt_singular(p, 0.0, q0, SingularEnds::Right, opts).value;
}

double frequency(const PotentialSpec& spec, double q0, const QuadratureOptions& opts) {
    return 0.5 * kPi / quarter_period(spec, q0, opts);
}

double angle(const PotentialSpec& spec, double q0, double q, Branch branch,
             const QuadratureOptions& opts) {
    require_amplitude(q0);
    require_allowed(q0, q);
    const double omega = frequency(spec, q0, opts);
    const double from_turning = omega * time_to_turning_point(spec, q0, std::abs(q), opts);
    const double outgoing = q >= 0.0 ? from_turning : kPi - from_turning;
    if (branch == Branch::Outgoing || outgoing == 0.0)
        return outgoing;
    return 2.0 * kPi - outgoing;
}

FrequencySlope domega_di(const PotentialSpec& spec, double q0) {
    require_amplitude(q0);
    const double h = height(spec, q0);
    // Energy scale max(H, 1); the cap keeps the lower stencil point above the well bottom.
    const double step = std::min(0.5 * h, std::max(1e-5 * std::max(h, 1.0), 1e-7));

    auto omega_at = [&](double height_value) {
        return frequency(spec, amplitude_for_height(spec, height_value), kTightQuadrature);
    };
    auto central = [&](double s) { return (omega_at(h + s) - omega_at(h - s)) / (2.0 * s); };

    const double coarse = central(step);
    const double fine = central(0.5 * step);
    FrequencySlope out;
    out.domega_de = (4.0 * fine - coarse) / 3.0;
    out.abs_error = std::abs(out.domega_de - fine);
    out.domega_di = frequency(spec, q0, kTightQuadrature) * out.domega_de;
    // Near either end the frequency loses digits faster than the step can absorb.
    out.accuracy_warning = q0 < 1e-5 || 1.0 - q0 < 1e-4 ||
                           out.abs_error > 1e-6 * std::abs(out.domega_de);
    return out;
}

OrbitRecord orbit_record(const PotentialSpec& spec, double q0) {
    require_amplitude(q0);
    OrbitRecord r;
    r.q0 = q0;
    r.e = wall_potential(spec, q0);
    r.h = height(spec, q0);
    r.action = action(spec, q0);
    r.omega = frequency(spec, q0);
    const FrequencySlope slope = domega_di(spec, q0);
    r.domega_de = slope.domega_de;
    r.domega_di = r.omega * slope.domega_de;
    r.accuracy_warning = slope.accuracy_warning;
    return r;
}

}  // namespace ljcell
