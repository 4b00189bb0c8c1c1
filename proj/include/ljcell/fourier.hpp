#pragma once

#include "ljcell/potentials.hpp"
#include "ljcell/specfun.hpp"

namespace ljcell {

/// Harmonic n of the moving-wall coupling H1(q) = U'(1 - q) along an unperturbed orbit.
struct FourierCoefficient {
    int n = 0;
    double value = 0.0;
    double q0 = 0.0;
};

/// Above this index the oscillatory quadrature is refused.
inline constexpr int kMaxReliableHarmonic = 16;

/// H_n = (1/pi) * integral over one period of U'(1 - q(phi)) cos(n phi) dphi.
///
/// The angle integral is traded for a coordinate integral over the quarter
/// orbit [0, q0] (dphi = omega dq / p), with the half-orbit reflection
/// q(pi - phi) = -q(phi) folding the left wall term in with sign (-1)^n.
/// The phase at each node is itself a turning-point integral.
FourierCoefficient fourier_coeff(const PotentialSpec& spec, double q0, int n,
                                 const QuadratureOptions& opts = {});

}  // namespace ljcell
