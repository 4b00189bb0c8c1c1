#pragma once

#include <stdexcept>
#include <string>

namespace ljcell {

/// Argument outside the physical domain (wall contact, forbidden region, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input such as a derivative order or harmonic index out of range.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative method ran out of budget. Carries the best estimate it had.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double abs_error)
        : std::runtime_error(what), best_estimate_(best_estimate), abs_error_(abs_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double abs_error() const noexcept { return abs_error_; }

private:
    double best_estimate_;
    double abs_error_;
};

/// No orbit satisfies n*omega(I) = omega1 for the requested harmonic.
class NoResonanceError : public std::runtime_error {
public:
    NoResonanceError(const std::string& what, int harmonic)
        : std::runtime_error(what), harmonic_(harmonic) {}

    int harmonic() const noexcept { return harmonic_; }

private:
    int harmonic_;
};

/// The requested quantity cannot be delivered at a meaningful accuracy.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An asymptotic formula was requested outside the regime where it applies.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ljcell
