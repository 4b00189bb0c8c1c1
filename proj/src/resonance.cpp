#include "ljcell/resonance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "detail/roots.hpp"
#include "ljcell/errors.hpp"
#include "ljcell/fourier.hpp"

namespace ljcell {

namespace {

void require_harmonic(int n, int minimum) {
    if (n < minimum) {
        throw ArgumentError("harmonic index must be >= " + std::to_string(minimum) + ", got " +
                            std::to_string(n));
    }
}

}  // namespace

ResonanceInfo resonance_at(const PotentialSpec& spec, int n, double q0) {
    require_harmonic(n, 1);
    ResonanceInfo info;
    info.n = n;
    info.q0n = q0;
    info.orbit = orbit_record(spec, q0);
    info.hn = fourier_coeff(spec, q0, n).value;
    info.delta_omega = resonance_width(spec, info);
    return info;
}

ResonanceInfo find_resonance(const PotentialSpec& spec, int n) {
    validate(spec);
    require_harmonic(n, 1);
    const double target = spec.omega1 / n;
    const double bottom = well_bottom_frequency(spec);
    if (!(target > bottom)) {
        std::ostringstream msg;
        msg << "no resonance for harmonic " << n << ": omega1/n = " << target
            << " does not exceed the well-bottom frequency " << bottom;
        throw NoResonanceError(msg.str(), n);
    }

    // omega grows monotonically from the well-bottom value as q0 -> 1.
    auto residual = [&](double q0) {
        return q0 == 0.0 ? bottom - target : frequency(spec, q0) - target;
    };
    double hi = 0.5;
    double fhi = residual(hi);
    while (fhi < 0.0) {
        hi = 1.0 - 0.5 * (1.0 - hi);
        if (hi >= 1.0 - 1e-12) {
            std::ostringstream msg;
            msg << "no resonance for harmonic " << n << ": omega1/n = " << target
                << " lies beyond the frequency reachable inside the cell";
            throw NoResonanceError(msg.str(), n);
        }
        fhi = residual(hi);
    }
    double lo = 0.0;
    double flo = bottom - target;
    // Tighten the lower bracket geometrically; the frequency is flat near q0 = 0.
    for (double probe = 0.5 * hi; probe > 1e-8; probe *= 0.5) {
        const double f = residual(probe);
        if (f >= 0.0) {
            hi = probe;
            fhi = f;
        } else {
            lo = probe;
            flo = f;
            break;
        }
    }
    const double q0 = detail::solve_bracketed(residual, lo, hi, flo, fhi, 1e-15);
    return resonance_at(spec, n, q0);
}

double resonance_width(const PotentialSpec& spec, const ResonanceInfo& info) {
    return std::sqrt(0.5 * std::abs(spec.amp * info.hn * info.orbit.domega_di));
}

OverlapResult overlap_k(const PotentialSpec& spec, int n) {
    require_harmonic(n, 2);
    OverlapResult out;
    out.n = n;
    out.upper = find_resonance(spec, n);
    out.lower = find_resonance(spec, n - 1);
    out.width_sum = out.upper.delta_omega + out.lower.delta_omega;
    out.spacing = std::abs(out.upper.orbit.omega - out.lower.orbit.omega);
    out.k_value = out.width_sum / out.spacing;
    return out;
}

std::vector<SweepPoint> sweep_k(const PotentialSpec& spec, int n, std::span<const double> q0_grid,
                                unsigned threads) {
    validate(spec);
    require_harmonic(n, 2);
    std::vector<SweepPoint> points(q0_grid.size());

    auto evaluate = [&](std::size_t i) {
        SweepPoint& pt = points[i];
        pt.q0 = q0_grid[i];
        try {
            PotentialSpec local = spec;
            local.omega1 = n * frequency(spec, pt.q0);
            pt.omega1 = local.omega1;
            OverlapResult r;
            r.n = n;
            r.upper = resonance_at(local, n, pt.q0);
            r.lower = find_resonance(local, n - 1);
            r.width_sum = r.upper.delta_omega + r.lower.delta_omega;
            r.spacing = std::abs(r.upper.orbit.omega - r.lower.orbit.omega);
            r.k_value = r.width_sum / r.spacing;
            pt.result = r;
        } catch (const std::exception& e) {
            pt.error = e.what();
            pt.failure = std::current_exception();
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i)
            evaluate(i);
        return points;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < points.size(); i = next++)
                    evaluate(i);
            });
        }
    }
    return points;
}

}  // namespace ljcell
