#include "ljcell/potentials.hpp"

#include <cmath>
#include <sstream>

#include "ljcell/errors.hpp"

namespace ljcell {

namespace {

void require_positive(double r) {
    if (!(r > 0.0)) {
        std::ostringstream msg;
        msg << "pair separation must be positive (wall collision), got " << r;
        throw DomainError(msg.str());
    }
}

void require_order(int order) {
    if (order < 1 || order > 4)
        throw ArgumentError("derivative order must be in 1..4, got " + std::to_string(order));
}

void require_inside_cell(double q) {
    if (!(std::abs(q) < 1.0)) {
        std::ostringstream msg;
        msg << "coordinate must lie strictly inside the cell (-1, 1), got " << q;
        throw DomainError(msg.str());
    }
}

// d^k/dr^k r^-a = (-1)^k a (a+1) ... (a+k-1) r^(-a-k)
double power_deriv(double r, double a, int order) {
    double coef = 1.0;
    for (int i = 0; i < order; ++i)
        coef *= -(a + i);
    return coef * std::pow(r, -a - order);
}

// (r + dr)^-a - r^-a
double power_increment(double r, double dr, double a) {
    return std::pow(r, -a) * std::expm1(-a * std::log1p(dr / r));
}

}  // namespace

void validate(const PotentialSpec& spec) {
    if (!(spec.beta > 0.0) || !(spec.alpha > spec.beta)) {
        std::ostringstream msg;
        msg << "exponents must satisfy alpha > beta > 0, got alpha=" << spec.alpha
            << " beta=" << spec.beta;
        throw ArgumentError(msg.str());
    }
    if (!(std::abs(spec.amp) < 1.0)) {
        std::ostringstream msg;
        msg << "drive amplitude must satisfy |amp| < 1, got " << spec.amp;
        throw ArgumentError(msg.str());
    }
    if (!(spec.omega1 > 0.0)) {
        std::ostringstream msg;
        msg << "drive frequency must be positive, got " << spec.omega1;
        throw ArgumentError(msg.str());
    }
}

std::vector<std::string> validity_warnings(const PotentialSpec& spec) {
    std::vector<std::string> out;
    if (std::abs(spec.amp) > kAmplitudeWarningThreshold) {
        std::ostringstream msg;
        msg << "drive amplitude |amp|=" << std::abs(spec.amp) << " exceeds "
            << kAmplitudeWarningThreshold << "; first-order expansion in eps(t) is unreliable";
        out.push_back(msg.str());
    }
    return out;
}

double lj(const PotentialSpec& spec, double r) {
    require_positive(r);
    return std::pow(r, -spec.alpha) - (spec.alpha / spec.beta) * std::pow(r, -spec.beta);
}

double lj_deriv(const PotentialSpec& spec, double r, int order) {
    require_order(order);
    require_positive(r);
    return power_deriv(r, spec.alpha, order) -
           (spec.alpha / spec.beta) * power_deriv(r, spec.beta, order);
}

double lj_increment(const PotentialSpec& spec, double r, double dr) {
    require_positive(r);
    require_positive(r + dr);
    return power_increment(r, dr, spec.alpha) -
           (spec.alpha / spec.beta) * power_increment(r, dr, spec.beta);
}

double wall_potential(const PotentialSpec& spec, double q) {
    require_inside_cell(q);
    return lj(spec, 1.0 + q) + lj(spec, 1.0 - q);
}

double wall_deriv(const PotentialSpec& spec, double q, int order) {
    require_order(order);
    require_inside_cell(q);
    const double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return lj_deriv(spec, 1.0 + q, order) + sign * lj_deriv(spec, 1.0 - q, order);
}

double energy_gap(const PotentialSpec& spec, double q0, double q) {
    require_inside_cell(q0);
    require_inside_cell(q);
    // W is even, so work with magnitudes; d is exact when |q| is close to |q0|.
    const double x = std::abs(q0);
    const double y = std::abs(q);
    return energy_rise(spec, y, x - y);
}

double energy_rise(const PotentialSpec& spec, double y, double d) {
    require_inside_cell(y);
    require_inside_cell(y + d);
    return lj_increment(spec, 1.0 + y, d) + lj_increment(spec, 1.0 - y, -d);
}

QuarticCoefficients quartic_coefficients(const PotentialSpec& spec) {
    return {2.0 * lj(spec, 1.0), lj_deriv(spec, 1.0, 2), lj_deriv(spec, 1.0, 4) / 12.0};
}

double hard_wall_potential(const PotentialSpec& spec, double q) {
    if (!(q >= 0.0) || !(q < 1.0)) {
        std::ostringstream msg;
        msg << "hard-wall model is defined on [0, 1), got q=" << q;
        throw DomainError(msg.str());
    }
    return std::pow(1.0 - q, -spec.alpha);
}

double well_bottom_frequency(const PotentialSpec& spec) {
    return std::sqrt(2.0 * lj_deriv(spec, 1.0, 2));
}

}  // namespace ljcell
