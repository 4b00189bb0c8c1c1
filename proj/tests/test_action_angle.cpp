#include <cmath>
#include <vector>

#include "doctest.h"
#include "ljcell/action_angle.hpp"
#include "ljcell/errors.hpp"
#include "oracles.hpp"

using namespace ljcell;

namespace {

// Action by the substitution q = q0 (1 - s^2), which makes the integrand
// smooth at the turning point, then plain Simpson.
double action_by_simpson(const PotentialSpec& s, double q0, int n) {
    return 2.0 / oracle::pi * oracle::simpson(
                                  [&](double t) {
                                      const double q = q0 * (1.0 - t * t);
                                      const double gap =
                                          wall_potential(s, q0) - wall_potential(s, q);
                                      return std::sqrt(2.0 * std::max(gap, 0.0)) * 2.0 * q0 * t;
                                  },
                                  0.0, 1.0, n);
}

}  // namespace

TEST_CASE("turning points") {
    const PotentialSpec s;
    const double w0 = -2.0;
    const double tiny = 1e-12;
    const TurningPoints tp = turning_points(s, w0 + tiny);
    CHECK(tp.right == doctest::Approx(std::sqrt(tiny / 72.0)).epsilon(1e-3));
    CHECK(tp.left == -tp.right);
    CHECK(turning_points(s, wall_potential(s, 0.5)).right == doctest::Approx(0.5).epsilon(1e-13));
    for (double q : {0.01, 0.3, 0.8, 0.97}) {
        const TurningPoints t = turning_points(s, wall_potential(s, q));
        CHECK(t.left == -t.right);
        CHECK(t.right == doctest::Approx(q).epsilon(1e-12));
    }
    CHECK_THROWS_AS(turning_points(s, w0), DomainError);
    CHECK_THROWS_AS(turning_points(s, w0 - 1.0), DomainError);
    CHECK(amplitude_for_height(s, height(s, 0.123)) == doctest::Approx(0.123).epsilon(1e-13));
}

TEST_CASE("momentum") {
    const PotentialSpec s;
    CHECK(momentum(s, 0.4, 0.4) == 0.0);
    CHECK(momentum(s, 1e-4, 0.0) == doctest::Approx(12.0 * 1e-4).epsilon(1e-4));
    CHECK(momentum(s, 0.6, 0.25) == momentum(s, 0.6, -0.25));
    CHECK_THROWS_AS(momentum(s, 0.3, 0.31), DomainError);
    CHECK_THROWS_AS(momentum(s, 1.0, 0.1), DomainError);
}

TEST_CASE("action") {
    const PotentialSpec s;
    const double q0 = 1e-4;
    CHECK(action(s, q0) == doctest::Approx(height(s, q0) / 12.0).epsilon(1e-6));
    double prev = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double v = action(s, 0.1 * i);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(action(s, 0.5) == doctest::Approx(action_by_simpson(s, 0.5, 20000)).epsilon(1e-6));
    CHECK(action(s, 0.2) == doctest::Approx(action_by_simpson(s, 0.2, 20000)).epsilon(1e-6));
}

TEST_CASE("action over the full orbit equals the folded quarter") {
    const PotentialSpec s;
    const double q0 = 0.35;
    // (1/2pi) * loop integral of p dq = (2/2pi) * integral of p over [-q0, q0].
    const auto full = integrate_sqrt_singular(
        [&](double q) { return std::sqrt(2.0 * std::max(energy_gap(s, q0, q), 0.0)); }, -q0, q0,
        SingularEnds::Both, {1e-13, 0.0, 400000});
    CHECK(full.value / oracle::pi == doctest::Approx(action(s, q0)).epsilon(1e-11));
}

TEST_CASE("frequency") {
    const PotentialSpec s;
    CHECK(frequency(s, 1e-3) == doctest::Approx(12.0).epsilon(0.005));
    CHECK(frequency(s, 0.99) > frequency(s, 0.9));
    double prev = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double w = frequency(s, 0.05 * i);
        CHECK(w > prev);
        prev = w;
    }
    for (double q0 : {1e-3, 0.2, 0.7}) {
        const double period = 4.0 * quarter_period(s, q0);
        CHECK(frequency(s, q0) * period / (2.0 * oracle::pi) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("energy derivative of the action is the inverse frequency") {
    const PotentialSpec s;
    const QuadratureOptions tight{1e-13, 0.0, 400000};
    for (double q0 : {0.3, 0.4}) {
        const double e = wall_potential(s, q0);
        const double de = 1e-4 * std::max(1.0, height(s, q0));
        auto i_at = [&](double energy) {
            return action(s, turning_points(s, energy).right, tight);
        };
        const double di = (i_at(e + de) - i_at(e - de)) / (2.0 * de);
        CHECK(frequency(s, q0) * di == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("energy differences over adjacent grid amplitudes") {
    const PotentialSpec s;
    const QuadratureOptions tight{1e-13, 0.0, 400000};
    const double spacing = 1e-4;
    for (int i = 1; i <= 9; ++i) {
        const double q = 0.1 * i;
        const double de = wall_potential(s, q + spacing) - wall_potential(s, q - spacing);
        const double di = action(s, q + spacing, tight) - action(s, q - spacing, tight);
        CAPTURE(q);
        CHECK(de / di == doctest::Approx(frequency(s, q)).epsilon(1e-4));
    }
}

TEST_CASE("angle") {
    const PotentialSpec s;
    const double q0 = 0.4;
    CHECK(angle(s, q0, q0) == 0.0);
    CHECK(angle(s, q0, -q0) == doctest::Approx(oracle::pi).epsilon(1e-14));
    CHECK(angle(s, 1e-4, 0.0) == doctest::Approx(oracle::pi / 2).epsilon(1e-4));
    CHECK(angle(s, q0, 0.1, Branch::Returning) ==
          doctest::Approx(2.0 * oracle::pi - angle(s, q0, 0.1)).epsilon(1e-15));
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double q = q0 - 2.0 * q0 * i / 40.0;
        const double phi = angle(s, q0, q);
        CHECK(phi > prev);
        prev = phi;
    }
    CHECK_THROWS_AS(angle(s, q0, 0.41), DomainError);
}

TEST_CASE("frequency slope") {
    const PotentialSpec s;
    const double rederived = 3.0 * 2226.0 / (2.0 * std::sqrt(2.0) * std::pow(72.0, 1.5));
    const FrequencySlope small = domega_di(s, 1e-3);
    CHECK(small.domega_de == doctest::Approx(rederived).epsilon(1e-3));
    CHECK(small.domega_di == doctest::Approx(12.0 * rederived).epsilon(2e-3));

    // Finite-difference oracle: slope of omega against energy with a wide step.
    for (double q0 : {0.05, 0.3, 0.7}) {
        const double e = wall_potential(s, q0);
        const double de = 1e-3 * std::max(1.0, height(s, q0));
        auto w = [&](double energy) { return frequency(s, turning_points(s, energy).right); };
        const double fd = (w(e + de) - w(e - de)) / (2.0 * de);
        const FrequencySlope slope = domega_di(s, q0);
        CHECK(slope.domega_de == doctest::Approx(fd).epsilon(1e-4));
        CHECK(slope.abs_error <= 1e-6 * std::abs(slope.domega_de));
        CHECK_FALSE(slope.accuracy_warning);
    }
    for (int i = 1; i <= 19; ++i)
        CHECK(domega_di(s, 0.05 * i).domega_di > 0.0);
}

TEST_CASE("frequency slope flags the near-wall limit") {
    const PotentialSpec s;
    CHECK(domega_di(s, 1.0 - 5e-5).accuracy_warning);
}

TEST_CASE("orbit record") {
    const PotentialSpec s;
    const OrbitRecord r = orbit_record(s, 1e-3);
    CHECK(r.omega == doctest::Approx(12.0).epsilon(1e-3));
    CHECK(r.action == doctest::Approx(r.h / 12.0).epsilon(1e-3));
    CHECK(r.e == wall_potential(s, 1e-3));
    CHECK(r.h > 0.0);

    const OrbitRecord mid = orbit_record(s, 0.3);
    const double de = 1e-4 * mid.h;
    const double qa = amplitude_for_height(s, mid.h - de);
    const double qb = amplitude_for_height(s, mid.h + de);
    const double dedi = 2.0 * de / (action(s, qb, {1e-13, 0, 400000}) -
                                    action(s, qa, {1e-13, 0, 400000}));
    CHECK(dedi == doctest::Approx(mid.omega).epsilon(1e-4));
    CHECK(mid.domega_di == doctest::Approx(mid.omega * mid.domega_de).epsilon(1e-15));
}
