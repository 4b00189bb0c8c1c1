#include "ljcell/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ljcell/action_angle.hpp"
#include "ljcell/errors.hpp"
#include "ljcell/fourier.hpp"

namespace ljcell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr QuadratureOptions kTight{1e-13, 0.0, 400000};

void require_high_energy(double e) {
    if (!(e > kHighEnergyThreshold) || !std::isfinite(e)) {
        std::ostringstream msg;
        msg << "hard-wall approximation needs energy above " << kHighEnergyThreshold << ", got "
            << e;
        throw RegimeError(msg.str());
    }
}

// Central difference with one Richardson level.
template <class F>
double derivative(F&& f, double x, double step) {
    auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    const double coarse = central(step);
    const double fine = central(0.5 * step);
    return (4.0 * fine - coarse) / 3.0;
}

// e - (s1 + d)^-alpha with e s1^alpha = 1, kept accurate as d -> 0.
double hard_wall_gap(double alpha, double e, double s1, double d) {
    return -e * std::expm1(-alpha * std::log1p(d / s1));
}

double hard_wall_time(const PotentialSpec& spec, double e, double lo,
                      const QuadratureOptions& opts) {
    const double q1 = hard_wall_turning_point(spec, e);
    if (lo >= q1)
        return 0.0;
    const double s1 = 1.0 - q1;
    const GapIntegrand inverse_momentum = [&](double, double, double d) {
        return 1.0 / std::sqrt(2.0 * hard_wall_gap(spec.alpha, e, s1, d));
    };
    return integrate_sqrt_singular(inverse_momentum, lo, q1, SingularEnds::Right, opts).value;
}

double spread(const std::vector<ScalingRow>& rows, double ScalingRow::*field) {
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& r : rows) {
        const double v = std::abs(r.*field);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (rows.empty())
        return 1.0;
    return lo > 0.0 ? hi / lo : INFINITY;
}

}  // namespace

SmallEnergyAsymptote small_e_asymptote(const PotentialSpec& spec, double h) {
    validate(spec);
    if (!(h > 0.0) || !std::isfinite(h)) {
        std::ostringstream msg;
        msg << "energy above the well bottom must be positive, got " << h;
        throw DomainError(msg.str());
    }
    const QuarticCoefficients qc = quartic_coefficients(spec);
    const double b = qc.b;
    const double c = qc.c;
    const double root = std::sqrt(b * b + 4.0 * c * h);

    SmallEnergyAsymptote out;
    out.h = h;
    const double t1_sq = 2.0 * h / (b + root);
    out.t1 = std::sqrt(t1_sq);
    out.a2 = (b + root) / (2.0 * c);
    const double sum = t1_sq + out.a2;
    out.k = std::sqrt(t1_sq / sum);
    out.period = 2.0 * std::sqrt(2.0 / c) * complete_elliptic_k(out.k) / std::sqrt(sum);
    out.omega = 2.0 * kPi / out.period;
    out.omega_leading = std::sqrt(2.0 * b);
    out.domega_de = small_e_domega_de(spec);
    return out;
}

double small_e_domega_de(const PotentialSpec& spec) {
    const QuarticCoefficients qc = quartic_coefficients(spec);
    return 3.0 * qc.c / (2.0 * std::numbers::sqrt2 * std::pow(qc.b, 1.5));
}

double small_e_domega_de_alternative(const PotentialSpec& spec) {
    return lj_deriv(spec, 1.0, 4) / (4.0 * std::sqrt(2.0 * lj_deriv(spec, 1.0, 2)));
}

double k21_small(const PotentialSpec& spec, double h, std::optional<double> omega1) {
    validate(spec);
    const double u2 = lj_deriv(spec, 1.0, 2);
    const double u4 = lj_deriv(spec, 1.0, 4);
    const double w1 = omega1.value_or(2.0 * well_bottom_frequency(spec));
    const double radicand = 0.5 * spec.amp * std::sqrt(h * u2) * u4 / (8.0 * u2);
    return std::abs(std::sqrt(std::abs(radicand)) / w1);
}

double k32_small(const PotentialSpec& spec, double h, std::optional<double> omega1) {
    validate(spec);
    const double u2 = lj_deriv(spec, 1.0, 2);
    const double u3 = lj_deriv(spec, 1.0, 3);
    const double u4 = lj_deriv(spec, 1.0, 4);
    const double w1 = omega1.value_or(3.0 * well_bottom_frequency(spec));
    const double radicand = 0.5 * spec.amp * h * u3 / (32.0 * u2) * u4 / u2;
    return std::abs(3.0 * std::sqrt(std::abs(radicand)) / w1);
}

double HighEnergyAsymptote::hn_limit(int n) const {
    return (n % 2 == 0 ? -1.0 : 1.0) * hn_limit_magnitude;
}

double hard_wall_turning_point(const PotentialSpec& spec, double e) {
    if (!(e > 1.0))
        throw DomainError("hard-wall energy must exceed 1 for a turning point inside the cell");
    return -std::expm1(-std::log(e) / spec.alpha);
}

double hard_wall_action(const PotentialSpec& spec, double e, const QuadratureOptions& opts) {
    const double q1 = hard_wall_turning_point(spec, e);
    const double s1 = 1.0 - q1;
    const GapIntegrand p = [&](double, double, double d) {
        return std::sqrt(2.0 * hard_wall_gap(spec.alpha, e, s1, d));
    };
    return 2.0 / kPi * integrate_sqrt_singular(p, 0.0, q1, SingularEnds::Right, opts).value;
}

double hard_wall_frequency(const PotentialSpec& spec, double e, const QuadratureOptions& opts) {
    return 0.5 * kPi / hard_wall_time(spec, e, 0.0, opts);
}

double hard_wall_angle(const PotentialSpec& spec, double e, double q) {
    const double q1 = hard_wall_turning_point(spec, e);
    if (!(std::abs(q) <= q1))
        throw DomainError("coordinate lies outside the hard-wall orbit");
    const double from_turning =
        hard_wall_frequency(spec, e, kTight) * hard_wall_time(spec, e, std::abs(q), kTight);
    return q >= 0.0 ? from_turning : kPi - from_turning;
}

HighEnergyAsymptote high_e_action(const PotentialSpec& spec, double e) {
    validate(spec);
    require_high_energy(e);
    HighEnergyAsymptote out;
    out.e = e;
    out.q1_big = hard_wall_turning_point(spec, e);
    out.j_big = hard_wall_action(spec, e, kTight);
    const double step = 1e-3 * e;
    const double djde =
        derivative([&](double x) { return hard_wall_action(spec, x, kTight); }, e, step);
    out.omega_big = 1.0 / djde;
    out.domega_big_de =
        derivative([&](double x) { return hard_wall_frequency(spec, x, kTight); }, e, step);
    out.hn_limit_magnitude = 0.5 * (1.0 + std::exp2(-spec.alpha));
    return out;
}

ScalingExponents scaling_exponents(const PotentialSpec& spec) {
    const double shift = (1.0 - spec.beta) / spec.alpha;
    return {0.5 + shift, 1.5 + shift, 2.5 + shift, 1.0 + shift};
}

ScalingReport high_e_scaling_report(const PotentialSpec& spec, std::span<const double> e_grid) {
    validate(spec);
    if (!(spec.alpha > 2.0 * (spec.beta - 1.0))) {
        std::ostringstream msg;
        msg << "error scaling needs alpha > 2 (beta - 1); got alpha = " << spec.alpha
            << ", beta = " << spec.beta;
        throw RegimeError(msg.str());
    }
    for (double e : e_grid)
        require_high_energy(e);

    ScalingReport report;
    report.exponents = scaling_exponents(spec);
    const ScalingExponents& x = report.exponents;
    constexpr int kPhaseSamples = 33;

    for (double e : e_grid) {
        ScalingRow row;
        row.e = e;
        row.q0 = turning_points(spec, e).right;
        const OrbitRecord orbit = orbit_record(spec, row.q0);
        const HighEnergyAsymptote big = high_e_action(spec, e);

        row.action_diff = orbit.action - big.j_big;
        row.freq_diff = orbit.omega - big.omega_big;
        row.inverse_freq_diff = 1.0 / big.omega_big - 1.0 / orbit.omega;
        row.slope_diff = orbit.domega_de - big.domega_big_de;

        const double reach = std::min(row.q0, big.q1_big);
        double worst = 0.0;
        for (int i = 0; i < kPhaseSamples; ++i) {
            const double q = reach * i / (kPhaseSamples - 1);
            const double diff = angle(spec, row.q0, q, Branch::Outgoing, kTight) -
                                hard_wall_angle(spec, e, q);
            worst = std::max(worst, std::abs(diff));
        }
        row.phase_diff = worst;

        row.scaled_action = row.action_diff * std::pow(e, x.action);
        row.scaled_freq = row.freq_diff * std::pow(e, x.frequency);
        row.scaled_inverse_freq = row.inverse_freq_diff * std::pow(e, x.frequency);
        row.scaled_slope = row.slope_diff * std::pow(e, x.slope);
        row.scaled_phase = row.phase_diff * std::pow(e, x.phase);
        report.rows.push_back(row);
    }

    report.action_spread = spread(report.rows, &ScalingRow::scaled_action);
    report.freq_spread = spread(report.rows, &ScalingRow::scaled_freq);
    report.inverse_freq_spread = spread(report.rows, &ScalingRow::scaled_inverse_freq);
    report.slope_spread = spread(report.rows, &ScalingRow::scaled_slope);
    report.phase_spread = spread(report.rows, &ScalingRow::scaled_phase);
    const std::pair<const char*, double> columns[] = {
        {"action", report.action_spread},
        {"frequency", report.freq_spread},
        {"inverse_frequency", report.inverse_freq_spread},
        {"slope", report.slope_spread},
        {"phase", report.phase_spread},
    };
    for (const auto& [name, value] : columns)
        if (!(value <= report.bounded_factor))
            report.unbounded.push_back(name);
    return report;
}

double hn_high(const PotentialSpec& spec, double e, int n) {
    validate(spec);
    require_high_energy(e);
    if (n < 1)
        throw ArgumentError("harmonic index must be positive");
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return -e * sign * 0.5 * (1.0 + std::exp2(-spec.alpha));
}

double k_high(const PotentialSpec& spec, int n) {
    validate(spec);
    if (n < 2)
        throw ArgumentError("overlap needs a harmonic pair, n >= 2");
    return std::sqrt(0.5 * std::abs(spec.amp) * (1.0 + std::exp2(-spec.alpha))) * (n - 0.5);
}

}  // namespace ljcell
