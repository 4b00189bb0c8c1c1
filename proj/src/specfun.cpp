#include "ljcell/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "ljcell/errors.hpp"

namespace ljcell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_modulus(double k) {
    if (!(k >= 0.0) || !(k < 1.0)) {
        std::ostringstream msg;
        msg << "elliptic modulus must satisfy 0 <= k < 1, got " << k;
        throw DomainError(msg.str());
    }
}

// Kronrod abscissae and weights (QUADPACK qk15); Gauss weights for the
// 7-point rule live on the odd Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool at_roundoff_floor;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(centre - dx);
        f2[j] = f(centre + dx);
        const double sum = f1[j] + f2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
            resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * kEps * resabs;
    bool at_floor = false;
    if (err <= floor) {
        err = floor;
        at_floor = true;
    }
    return {a, b, value, err, at_floor};
}

template <class F>
QuadratureResult adaptive_gk(const F& f, double a, double b, const QuadratureOptions& opts) {
    std::size_t evaluations = 15;
    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod_15(f, a, b);
    double total = first.value;
    double error = first.error;
    panels.push(first);

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (error > tolerance()) {
        const Panel worst = panels.top();
        if (!std::isfinite(total)) {
            throw ConvergenceError("quadrature produced a non-finite value", total, error);
        }
        // Everything left is rounding noise; no subdivision will help.
        if (worst.at_roundoff_floor)
            break;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        if (evaluations + 30 > opts.max_evaluations) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not reach tolerance " << tolerance() << " within "
                << opts.max_evaluations << " evaluations (error estimate " << error << ")";
            throw ConvergenceError(msg.str(), total, error);
        }
        panels.pop();
        const Panel left = gauss_kronrod_15(f, worst.a, mid);
        const Panel right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift accumulated by the incremental updates.
    double value = 0.0;
    double err = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    if (!std::isfinite(value))
        throw ConvergenceError("quadrature produced a non-finite value", value, err);
    return {value, err, evaluations};
}

}  // namespace

double complete_elliptic_k(double k) {
    require_modulus(k);
    double a = 1.0;
    double g = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::abs(a - g) > 2.0 * kEps * a; ++i) {
        const double next_a = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = next_a;
    }
    return kPi / (a + g);
}

double carlson_rf(double x, double y, double z) {
    if (x < 0.0 || y < 0.0 || z < 0.0 || (x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
        throw DomainError("carlson_rf needs non-negative arguments with at most one zero");
    // Duplication until the arguments agree to ~eps^(1/6), then the 5th-order series.
    for (int i = 0; i < 100; ++i) {
        const double mu = (x + y + z) / 3.0;
        const double dx = 1.0 - x / mu;
        const double dy = 1.0 - y / mu;
        const double dz = 1.0 - z / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-3) {
            const double e2 = dx * dy - dz * dz;
            const double e3 = dx * dy * dz;
            return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
        }
        const double sx = std::sqrt(x);
        const double sy = std::sqrt(y);
        const double sz = std::sqrt(z);
        const double lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    throw ConvergenceError("carlson_rf duplication did not converge", 0.0, 0.0);
}

double incomplete_elliptic_f(double phi, double k) {
    require_modulus(k);
    if (!std::isfinite(phi))
        throw DomainError("incomplete_elliptic_f needs a finite amplitude");
    // Reduce to |phi| <= pi/2 using the quasi-periodicity in pi.
    const double periods = std::round(phi / kPi);
    const double reduced = phi - periods * kPi;
    const double s = std::sin(reduced);
    const double c = std::cos(reduced);
    const double f = s * carlson_rf(c * c, 1.0 - k * k * s * s, 1.0);
    return periods == 0.0 ? f : f + 2.0 * periods * complete_elliptic_k(k);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
    if (!(a < b))
        throw ArgumentError("integration interval must satisfy a < b");
    return adaptive_gk(f, a, b, opts);
}

QuadratureResult integrate_sqrt_singular(const GapIntegrand& f, double a, double b,
                                         SingularEnds ends, const QuadratureOptions& opts) {
    if (!(a < b))
        throw ArgumentError("integration interval must satisfy a < b");
    const double length = b - a;

    // u is the angle measured from the singular end, so that the distance
    // 2 L sin^2(u/2) and the Jacobian L sin(u) are both exact as u -> 0.
    // far_offset extends the far-side distance when [lo, hi] is half of [a, b].
    auto mapped = [&f](double lo, double hi, bool singular_at_hi, double far_offset,
                       const QuadratureOptions& o) {
        const double span = hi - lo;
        return adaptive_gk(
            [&f, lo, hi, span, singular_at_hi, far_offset](double u) {
                const double jac = span * std::sin(u);
                const double s = std::sin(0.5 * u);
                const double near = 2.0 * span * s * s;
                if (jac == 0.0 || near == 0.0)
                    return 0.0;
                const double far = span * std::cos(u);
                if (singular_at_hi) {
                    const double x = near < far ? hi - near : lo + far;
                    return f(x, far + far_offset, near) * jac;
                }
                const double x = near < far ? lo + near : hi - far;
                return f(x, near, far + far_offset) * jac;
            },
            0.0, 0.5 * kPi, o);
    };

    switch (ends) {
    case SingularEnds::None:
        return adaptive_gk([&](double x) { return f(x, x - a, b - x); }, a, b, opts);
    case SingularEnds::Right:
        return mapped(a, b, true, 0.0, opts);
    case SingularEnds::Left:
        return mapped(a, b, false, 0.0, opts);
    case SingularEnds::Both: {
        const double half = 0.5 * length;
        const double mid = a + half;
        const QuadratureResult lower = mapped(a, mid, false, half, opts);
        const QuadratureResult upper = mapped(mid, b, true, half, opts);
        return {lower.value + upper.value, lower.abs_error_estimate + upper.abs_error_estimate,
                lower.evaluations + upper.evaluations};
    }
    }
    throw ArgumentError("unknown SingularEnds value");
}

QuadratureResult integrate_sqrt_singular(const std::function<double(double)>& f, double a,
                                         double b, SingularEnds ends,
                                         const QuadratureOptions& opts) {
    return integrate_sqrt_singular(GapIntegrand([&](double x, double, double) { return f(x); }),
                                   a, b, ends, opts);
}

}  // namespace ljcell
