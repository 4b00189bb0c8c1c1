#include "ljcell/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ljcell/action_angle.hpp"
#include "ljcell/errors.hpp"

namespace ljcell {

FourierCoefficient fourier_coeff(const PotentialSpec& spec, double q0, int n,
                                 const QuadratureOptions& opts) {
    if (n < 1)
        throw ArgumentError("harmonic index must be >= 1, got " + std::to_string(n));
    if (n > kMaxReliableHarmonic) {
        throw AccuracyError("harmonic " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxReliableHarmonic) +
                            "; oscillatory quadrature would lose all relative accuracy");
    }
    if (!(q0 > 0.0) || !(q0 < 1.0))
        throw DomainError("orbit amplitude must satisfy 0 < q0 < 1");

    const double omega = frequency(spec, q0, opts);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;

    auto inverse_momentum = [&](double y, double d) {
        return 1.0 / std::sqrt(2.0 * energy_rise(spec, y, d));
    };

    const GapIntegrand integrand = [&](double q, double, double from_right) {
        // Phase from the turning point down to q.
        double elapsed = 0.0;
        if (from_right > 0.0) {
            const GapIntegrand inner = [&](double, double, double d) {
                return inverse_momentum(q0 - d, d);
            };
            elapsed = integrate_sqrt_singular(inner, q, q0, SingularEnds::Right, opts).value;
        }
        const double phase = omega * elapsed;
        const double coupling = lj_deriv(spec, 1.0 - q, 1) + parity * lj_deriv(spec, 1.0 + q, 1);
        return coupling * std::cos(n * phase) * inverse_momentum(q0 - from_right, from_right);
    };

    const QuadratureResult outer =
        integrate_sqrt_singular(integrand, 0.0, q0, SingularEnds::Right, opts);
    return {n, 2.0 * omega / std::numbers::pi * outer.value, q0};
}

}  // namespace ljcell
