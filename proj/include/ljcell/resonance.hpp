#pragma once

#include <exception>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ljcell/action_angle.hpp"
#include "ljcell/potentials.hpp"

namespace ljcell {

/// Orbit satisfying n * omega(I_n) = omega1 together with its pendulum width.
struct ResonanceInfo {
    int n = 0;
    double q0n = 0.0;
    OrbitRecord orbit;
    double hn = 0.0;           ///< H_n at the resonant orbit
    double delta_omega = 0.0;  ///< frequency half-width
};

/// Chirikov overlap of the resonances n and n - 1.
struct OverlapResult {
    int n = 0;
    double k_value = 0.0;
    double width_sum = 0.0;  ///< delta_omega(I_n) + delta_omega(I_{n-1})
    double spacing = 0.0;    ///< |omega(I_n) - omega(I_{n-1})|
    ResonanceInfo upper;     ///< harmonic n
    ResonanceInfo lower;     ///< harmonic n - 1

    bool overlapping() const { return k_value >= 1.0; }
};

/// Locate the orbit with n * omega = spec.omega1. Throws NoResonanceError when
/// omega1 / n does not exceed the well-bottom frequency.
ResonanceInfo find_resonance(const PotentialSpec& spec, int n);

/// ResonanceInfo for an orbit already known to be resonant with harmonic n.
ResonanceInfo resonance_at(const PotentialSpec& spec, int n, double q0);

/// sqrt(|amp * H_n * domega/dI| / 2).
double resonance_width(const PotentialSpec& spec, const ResonanceInfo& info);

/// K_{n,n-1} = (delta_omega_n + delta_omega_{n-1}) / |omega_n - omega_{n-1}|, n >= 2.
OverlapResult overlap_k(const PotentialSpec& spec, int n);

struct SweepPoint {
    double q0 = 0.0;
    double omega1 = 0.0;  ///< n * omega(q0), the drive placing resonance n at q0
    std::optional<OverlapResult> result;
    std::string error;    ///< empty on success
    std::exception_ptr failure;  ///< the exception behind error, for classification
};

/// K_{n,n-1} along a grid of upper-resonance amplitudes. Each point re-targets
/// the drive frequency so that resonance n sits at the grid amplitude. Failures
/// are recorded per point. Output order follows the grid for any thread count
/// (0 picks the hardware concurrency).
std::vector<SweepPoint> sweep_k(const PotentialSpec& spec, int n, std::span<const double> q0_grid,
                                unsigned threads = 0);

}  // namespace ljcell
