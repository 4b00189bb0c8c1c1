#include <cmath>
#include <vector>

#include "doctest.h"
#include "ljcell/action_angle.hpp"
#include "ljcell/dynamics.hpp"
#include "ljcell/errors.hpp"
#include "ljcell/resonance.hpp"
#include "oracles.hpp"

using namespace ljcell;

namespace {

PotentialSpec undriven() {
    PotentialSpec s;
    s.amp = 0.0;
    return s;
}

struct EnergyError {
    double max_over_steps = 0.0;
    double max_over_periods = 0.0;
};

EnergyError energy_error(const PotentialSpec& s, double q0, int periods, int steps) {
    const double period = 2.0 * oracle::pi / frequency(s, q0, {1e-13, 0.0, 400000});
    const double dt = period / steps;
    const double e0 = unperturbed_energy(s, q0, 0.0);
    PhaseState st{q0, 0.0, 0.0};
    EnergyError out;
    for (int k = 0; k < periods; ++k) {
        for (int j = 0; j < steps; ++j) {
            st = step(s, st, dt);
            const double rel = std::abs(unperturbed_energy(s, st.q, st.p) - e0) / std::abs(e0);
            out.max_over_steps = std::max(out.max_over_steps, rel);
        }
        const double rel = std::abs(unperturbed_energy(s, st.q, st.p) - e0) / std::abs(e0);
        out.max_over_periods = std::max(out.max_over_periods, rel);
    }
    return out;
}

}  // namespace

TEST_CASE("force") {
    const PotentialSpec quiet = undriven();
    CHECK(force(quiet, 0.0, 0.0) == 0.0);
    for (double q : {0.1, 0.45, 0.9})
        CHECK(force(quiet, q, 1.3) == doctest::Approx(-force(quiet, -q, 1.3)).epsilon(1e-15));
    CHECK(force(quiet, 0.3, 0.0) == doctest::Approx(-wall_deriv(quiet, 0.3, 1)).epsilon(1e-15));

    const PotentialSpec driven;
    CHECK(force(driven, 0.0, 0.0) == doctest::Approx(lj_deriv(driven, 1.01, 1)).epsilon(1e-15));
    CHECK(force(driven, 0.0, 0.0) != 0.0);
    CHECK(drive(driven, 0.0, oracle::pi / 2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-17));
    CHECK_THROWS_AS(force(driven, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(force(driven, 1.01, 0.0), DomainError);
    CHECK_NOTHROW(force(driven, 1.005, 0.0));
}

TEST_CASE("equilibrium is a fixed point") {
    const PotentialSpec s = undriven();
    PhaseState st;
    for (int i = 0; i < 10000; ++i)
        st = step(s, st, 1e-3);
    CHECK(st.q == 0.0);
    CHECK(st.p == 0.0);
    CHECK(st.t == doctest::Approx(10.0));
}

TEST_CASE("energy error at a thousand steps per period") {
    const PotentialSpec s = undriven();
    // Once per orbit period the bounded oscillation of the energy error returns
    // near zero, so the sampled value measures secular drift.
    const EnergyError moderate = energy_error(s, 0.1, 1000, 1000);
    CHECK(moderate.max_over_periods < 1e-8);
    // The bounded oscillation itself is (omega dt)^2 h / 4, below 1e-8 of |E|
    // on small orbits.
    const EnergyError small = energy_error(s, 0.005, 1000, 1000);
    CHECK(small.max_over_steps < 1e-8);
}

TEST_CASE("energy error is second order in the step") {
    const PotentialSpec s = undriven();
    for (double q0 : {0.05, 0.3}) {
        const double coarse = energy_error(s, q0, 100, 1000).max_over_steps;
        const double fine = energy_error(s, q0, 100, 2000).max_over_steps;
        CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));
    }
}

TEST_CASE("time reversal") {
    const PotentialSpec s = undriven();
    const PhaseState start{0.4, 0.3, 0.0};
    PhaseState st = start;
    const double dt = 1e-4;
    for (int i = 0; i < 20000; ++i)
        st = step(s, st, dt);
    st.p = -st.p;
    for (int i = 0; i < 20000; ++i)
        st = step(s, st, dt);
    CHECK(st.q == doctest::Approx(start.q).epsilon(1e-9));
    CHECK(-st.p == doctest::Approx(start.p).epsilon(1e-9));

    // The driven map is reversible with negative steps.
    const PotentialSpec driven;
    st = start;
    for (int i = 0; i < 5000; ++i)
        st = step(driven, st, dt);
    for (int i = 0; i < 5000; ++i)
        st = step(driven, st, -dt);
    CHECK(st.q == doctest::Approx(start.q).epsilon(1e-9));
    CHECK(st.p == doctest::Approx(start.p).epsilon(1e-9));
    CHECK(std::abs(st.t) < 1e-12);
}

TEST_CASE("phase-space area is preserved") {
    const PotentialSpec s = undriven();
    const double q0 = 0.05;
    const int steps = 1000;
    const double dt = 2.0 * oracle::pi / frequency(s, q0) / steps;
    auto flow = [&](double q, double p) {
        PhaseState st{q, p, 0.0};
        for (int i = 0; i < 10 * steps; ++i)
            st = step(s, st, dt);
        return st;
    };
    // Amplitude shear makes the difference error grow like (d t)^2.
    const double d = 1e-6;
    const PhaseState qp = flow(q0 + d, 0.0);
    const PhaseState qm = flow(q0 - d, 0.0);
    const PhaseState pp = flow(q0, d);
    const PhaseState pm = flow(q0, -d);
    const double a = (qp.q - qm.q) / (2 * d);
    const double b = (pp.q - pm.q) / (2 * d);
    const double c = (qp.p - qm.p) / (2 * d);
    const double e = (pp.p - pm.p) / (2 * d);
    CHECK(a * e - b * c == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("step halving near a wall") {
    const PotentialSpec s = undriven();
    // From rest at q = 0.3 the wall force is about -1100: one step of 0.06
    // drifts past q = -1, two steps of 0.03 stay inside.
    const PhaseState st{0.3, 0.0, 0.0};
    const double dt = 0.06;
    REQUIRE(st.q + 0.5 * dt * dt * force(s, st.q, 0.0) < -1.0);
    const PhaseState next = step(s, st, dt);
    const PhaseState two = step(s, step(s, st, 0.5 * dt), 0.5 * dt);
    CHECK(std::abs(next.q) < 1.0);
    CHECK(next.q == two.q);
    CHECK(next.p == two.p);
    CHECK(next.t == dt);
    // No halving depth can contain an infinite velocity.
    CHECK_THROWS_AS(step(s, {0.0, 1e300, 0.0}, 0.1), DomainError);
    CHECK_THROWS_AS(step(s, st, 0.0), ArgumentError);
}

TEST_CASE("section of the undriven orbit lies on one invariant curve") {
    const PotentialSpec s = undriven();
    const PoincareSection sec = poincare_section(s, {0.05, 0.0, 0.0}, 1000);
    REQUIRE_FALSE(sec.truncated());
    REQUIRE(sec.points.size() == 1001);
    CHECK(action_spread(s, sec.points) < 1e-6);
    const double period = 2.0 * oracle::pi / s.omega1;
    CHECK(sec.dt == doctest::Approx(period / 1000.0).epsilon(1e-15));
    for (const SectionPoint& pt : sec.points)
        CHECK(pt.t == static_cast<double>(pt.k) * period);
}

TEST_CASE("weak drive keeps a small orbit regular") {
    PotentialSpec s;
    // Exactly on the n = 2 resonance the orbit librates inside the island, so
    // the spread tracks the island width and the drive must stay weak.
    const double q0 = 0.05;
    s.omega1 = 2.0 * frequency(s, q0);
    s.amp = 1e-4;
    REQUIRE(overlap_k(s, 2).k_value < 0.3);
    const PoincareSection sec = poincare_section(s, {q0, 0.0, 0.0}, 1000, 1000, oracle::pi / 2);
    REQUIRE_FALSE(sec.truncated());
    CHECK(action_spread(s, sec.points) < 1e-2);
}

TEST_CASE("action spread grows with drive amplitude") {
    PotentialSpec s;
    const double q0 = 0.5;
    s.omega1 = 2.0 * frequency(s, q0);
    double prev = 0.0;
    for (double amp : {1e-3, 1e-2, 5e-2}) {
        s.amp = amp;
        const PoincareSection sec = poincare_section(s, {q0, 0.0, 0.0}, 1000, 1000, oracle::pi / 2);
        REQUIRE_FALSE(sec.truncated());
        const double spread = action_spread(s, sec.points);
        CHECK(spread > prev);
        prev = spread;
    }
}

TEST_CASE("section and spread argument checks") {
    const PotentialSpec s;
    CHECK_THROWS_AS(poincare_section(s, {0.1, 0.0, 0.0}, 10, 999), ArgumentError);
    CHECK_THROWS_AS(poincare_section(s, {1.5, 0.0, 0.0}, 10), DomainError);
    CHECK_THROWS_AS(action_spread(s, {}), ArgumentError);
    CHECK(action_spread(s, {SectionPoint{0, 0.0, 0.2, 0.1}}) == 0.0);
    CHECK_THROWS_AS(action_spread(s, {SectionPoint{0, 0.0, 1.002, 0.0}}), DomainError);
    CHECK(point_action(s, 0.0, 0.0) == 0.0);
    CHECK(point_action(s, 0.3, 0.0) == doctest::Approx(action(s, 0.3)).epsilon(1e-10));
}
