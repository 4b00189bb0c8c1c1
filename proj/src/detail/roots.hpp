#pragma once

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ljcell/errors.hpp"

namespace ljcell::detail {

/// Root of f on [lo, hi] where f(lo) and f(hi) differ in sign. Terminates
/// when the bracket is narrower than rel_tol relative to its midpoint.
template <class F>
double solve_bracketed(const F& f, double lo, double hi, double flo, double fhi,
                       double rel_tol = 1e-14) {
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw ConvergenceError("root is not bracketed", 0.5 * (lo + hi), hi - lo);
    std::uintmax_t max_iter = 200;
    auto tol = [rel_tol](double a, double b) {
        return std::abs(b - a) <= rel_tol * std::max(std::abs(a), std::abs(b)) ||
               std::abs(b - a) <= std::numeric_limits<double>::min();
    };
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
    return 0.5 * (a + b);
}

}  // namespace ljcell::detail
