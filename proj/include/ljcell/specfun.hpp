#pragma once

#include <cstddef>
#include <functional>

namespace ljcell {

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1, by the
/// arithmetic-geometric mean.
double complete_elliptic_k(double k);

/// Incomplete elliptic integral of the first kind F(phi, k), 0 <= k < 1.
/// Any real phi is accepted; F(phi + m*pi) = F(phi) + 2 m K(k).
double incomplete_elliptic_f(double phi, double k);

/// Carlson's symmetric integral R_F(x, y, z); at most one argument may be zero.
double carlson_rf(double x, double y, double z);

/// Which endpoints carry an inverse-square-root singularity.
enum class SingularEnds { None, Left, Right, Both };

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::size_t max_evaluations = 150000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
/// Throws ConvergenceError (with the best estimate) when the budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

/// Integrand that also receives the distances x - a and b - x, each computed
/// without cancellation, so near-endpoint differences can be formed exactly.
using GapIntegrand = std::function<double(double x, double from_left, double from_right)>;

/// Integral of f over [a, b] where f may behave like 1/sqrt(distance) at the
/// flagged ends. The flagged ends are removed by a sine map (x - a ~ theta^2)
/// before adaptive Gauss-Kronrod, so f is never evaluated at a singular end.
QuadratureResult integrate_sqrt_singular(const GapIntegrand& f, double a, double b,
                                         SingularEnds ends, const QuadratureOptions& opts = {});

QuadratureResult integrate_sqrt_singular(const std::function<double(double)>& f, double a,
                                         double b, SingularEnds ends,
                                         const QuadratureOptions& opts = {});

}  // namespace ljcell
