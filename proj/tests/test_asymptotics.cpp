#include <cmath>
#include <vector>

#include "doctest.h"
#include "ljcell/action_angle.hpp"
#include "ljcell/asymptotics.hpp"
#include "ljcell/errors.hpp"
#include "oracles.hpp"

using namespace ljcell;

TEST_CASE("quartic turning-point identities") {
    const PotentialSpec s;
    const double b = 72.0;
    const double c = 2226.0;
    for (double h : {1e-6, 1e-3, 1.0}) {
        const SmallEnergyAsymptote a = small_e_asymptote(s, h);
        const double t2 = a.t1 * a.t1;
        CHECK(b * t2 + c * t2 * t2 == doctest::Approx(h).epsilon(1e-12));
        CHECK(a.a2 - t2 == doctest::Approx(b / c).epsilon(1e-12));
        CHECK(a.k >= 0.0);
        CHECK(a.k < 1.0);
        CHECK(a.k * a.k == doctest::Approx(t2 / (t2 + a.a2)).epsilon(1e-14));
    }
}

TEST_CASE("small-energy limits") {
    const PotentialSpec s;
    const SmallEnergyAsymptote tiny = small_e_asymptote(s, 1e-10);
    CHECK(tiny.omega == doctest::Approx(12.0).epsilon(1e-8));
    CHECK(tiny.omega_leading == 12.0);
    const SmallEnergyAsymptote a = small_e_asymptote(s, 1e-6);
    CHECK(a.k == doctest::Approx(std::sqrt(2226e-6) / 72.0).epsilon(0.005));
    CHECK(a.domega_de == doctest::Approx(3.0 * 2226.0 / (2.0 * std::sqrt(2.0) * std::pow(72.0, 1.5)))
                             .epsilon(1e-15));
    CHECK(small_e_domega_de_alternative(s) == doctest::Approx(26712.0 / (4.0 * 12.0)).epsilon(1e-15));
    CHECK_THROWS_AS(small_e_asymptote(s, 0.0), DomainError);
}

TEST_CASE("quartic-model period matches direct quadrature of the quartic well") {
    const PotentialSpec s;
    const double h = 1e-3;
    const SmallEnergyAsymptote a = small_e_asymptote(s, h);
    const QuarticCoefficients qc = quartic_coefficients(s);
    const double t1 = a.t1;
    // Quarter period with q = t1 sin(theta); the quartic gap factors as
    // c (t1^2 - q^2)(q^2 + A^2), so the integrand is smooth in theta.
    const double quarter = oracle::simpson(
        [&](double th) {
            const double q = t1 * std::sin(th);
            const double gap = qc.b * (t1 * t1 - q * q) + qc.c * (t1 * t1 * t1 * t1 - q * q * q * q);
            const double dq = t1 * std::cos(th);
            return th >= oracle::pi / 2 ? 1.0 / std::sqrt(2.0 * qc.c * (t1 * t1 + a.a2))
                                        : dq / std::sqrt(2.0 * gap);
        },
        0.0, oracle::pi / 2, 4000);
    CHECK(4.0 * quarter == doctest::Approx(a.period).epsilon(1e-8));
}

TEST_CASE("small-energy frequency tracks the exact frequency") {
    const PotentialSpec s;
    for (double q0 : {0.001, 0.005, 0.01, 0.02}) {
        const double exact = frequency(s, q0);
        const double model = small_e_asymptote(s, height(s, q0)).omega;
        CHECK(std::abs(exact - model) / exact < 0.01);
    }
}

TEST_CASE("small-energy overlap closed forms") {
    PotentialSpec s;
    const double h = 1e-3;
    const double w1 = 24.0;
    const double expected = std::sqrt(0.5 * 0.01 * std::sqrt(h * 72.0) * 26712.0 / (8.0 * 72.0)) / w1;
    CHECK(k21_small(s, h) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(k21_small(s, h, 30.0) == doctest::Approx(expected * 24.0 / 30.0).epsilon(1e-14));
    CHECK(k21_small(s, 16.0 * h) / k21_small(s, h) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(k32_small(s, 4.0 * h) / k32_small(s, h) == doctest::Approx(2.0).epsilon(1e-14));
    const double k32 =
        3.0 / 36.0 * std::sqrt(0.5 * 0.01 * h * 1512.0 / (32.0 * 72.0) * 26712.0 / 72.0);
    CHECK(k32_small(s, h) == doctest::Approx(k32).epsilon(1e-14));
    // Smoothness: relative change over a small parameter step stays small.
    for (double x : {1e-6, 1e-4, 1e-2}) {
        const double d = std::abs(k21_small(s, x * 1.001) / k21_small(s, x) - 1.0);
        CHECK(d < 1e-3);
    }
}

TEST_CASE("hard-wall action") {
    const PotentialSpec s;
    CHECK(hard_wall_turning_point(s, 4096.0) == doctest::Approx(0.5).epsilon(1e-15));
    const HighEnergyAsymptote a = high_e_action(s, 4096.0);
    CHECK(a.q1_big == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(a.e * std::pow(1.0 - a.q1_big, 12.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(a.hn_limit(1) == doctest::Approx(0.5 * (1.0 + std::exp2(-12.0))).epsilon(1e-15));
    CHECK(a.hn_limit(2) == -a.hn_limit(1));

    // Independent action: substitution s = 1 - q = s1 / u^(1/alpha) is awkward,
    // so use q = Q1 (1 - t^2) and Simpson.
    const double q1 = a.q1_big;
    const double j = 2.0 / oracle::pi * oracle::simpson(
                                            [&](double t) {
                                                const double q = q1 * (1.0 - t * t);
                                                const double gap =
                                                    a.e - std::pow(1.0 - q, -12.0);
                                                return std::sqrt(2.0 * std::max(gap, 0.0)) *
                                                       2.0 * q1 * t;
                                            },
                                            0.0, 1.0, 20000);
    CHECK(a.j_big == doctest::Approx(j).epsilon(1e-7));

    // Frequency by differences agrees with the quadrature frequency.
    CHECK(a.omega_big == doctest::Approx(hard_wall_frequency(s, 4096.0)).epsilon(1e-8));
    CHECK_THROWS_AS(high_e_action(s, 100.0), RegimeError);
    CHECK_THROWS_AS(high_e_action(s, 50.0), RegimeError);
}

TEST_CASE("hard-wall action approaches the free particle") {
    const PotentialSpec s;
    double prev_gap = INFINITY;
    for (double e : {1e3, 1e5, 1e7, 1e9}) {
        const double ratio = high_e_action(s, 4.0 * e).j_big / high_e_action(s, e).j_big;
        const double gap = std::abs(ratio - 2.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
        const double q1 = hard_wall_turning_point(s, e);
        const double free = 2.0 / oracle::pi * std::sqrt(2.0 * e) * q1;
        CHECK(high_e_action(s, e).j_big < free);
    }
}

TEST_CASE("hard-wall action against its boundary-layer expansion") {
    // J = (2/pi) sqrt(2E) (Q1 - s1 C) up to O(s1^alpha), s1 = 1 - Q1, with
    // C = integral over x in [1, inf) of 1 - sqrt(1 - x^-alpha), evaluated
    // with x = 1/y and y = 1 - t^2.
    const PotentialSpec s;
    const double alpha = s.alpha;
    const double c = oracle::simpson(
        [&](double t) {
            const double y = 1.0 - t * t;
            if (y <= 0.0)
                return 0.0;
            return (1.0 - std::sqrt(1.0 - std::pow(y, alpha))) / (y * y) * 2.0 * t;
        },
        0.0, 1.0, 20000);
    for (double e : {1e6, 1e9, 1e12}) {
        const double q1 = hard_wall_turning_point(s, e);
        const double expansion = 2.0 / oracle::pi * std::sqrt(2.0 * e) * (q1 - (1.0 - q1) * c);
        CAPTURE(e);
        CHECK(high_e_action(s, e).j_big == doctest::Approx(expansion).epsilon(1e-6));
    }
}

TEST_CASE("hard-wall angle") {
    const PotentialSpec s;
    const double e = 1e4;
    const double q1 = hard_wall_turning_point(s, e);
    CHECK(hard_wall_angle(s, e, q1) == 0.0);
    CHECK(hard_wall_angle(s, e, 0.0) == doctest::Approx(oracle::pi / 2).epsilon(1e-12));
    CHECK(hard_wall_angle(s, e, -q1) == doctest::Approx(oracle::pi).epsilon(1e-12));
}

TEST_CASE("action difference to the hard wall scales with its predicted power") {
    const PotentialSpec s;
    const std::vector<double> grid{1e3, 1e4, 1e5};
    const ScalingReport r = high_e_scaling_report(s, grid);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.action_spread < 3.0);
    // The inverse-frequency difference is the energy derivative of the action
    // difference and decays with the frequency exponent.
    CHECK(r.inverse_freq_spread < 3.0);
    for (const ScalingRow& row : r.rows) {
        CHECK(row.scaled_action == doctest::Approx(row.action_diff * std::pow(row.e, 1.0 / 12.0)));
        CHECK(row.inverse_freq_diff > 0.0);
    }
}

TEST_CASE("scaling exponents") {
    const ScalingExponents x = scaling_exponents(PotentialSpec{});
    CHECK(x.action == doctest::Approx(1.0 / 12.0));
    CHECK(x.frequency == doctest::Approx(13.0 / 12.0));
    CHECK(x.slope == doctest::Approx(25.0 / 12.0));
    CHECK(x.phase == doctest::Approx(7.0 / 12.0));
    const ScalingExponents flat = scaling_exponents(PotentialSpec{12.0, 1.0, 0.01, 30.0});
    CHECK(flat.action == 0.5);
    CHECK(flat.frequency == 1.5);
    CHECK(flat.slope == 2.5);
    CHECK(flat.phase == 1.0);
    const std::vector<double> grid{1e3};
    CHECK_THROWS_AS(high_e_scaling_report(PotentialSpec{8.0, 5.0, 0.01, 30.0}, grid), RegimeError);
    CHECK_THROWS_AS(high_e_scaling_report(PotentialSpec{}, std::vector<double>{50.0}), RegimeError);
}

TEST_CASE("high-energy closed forms") {
    const PotentialSpec s;
    CHECK(hn_high(s, 1e4, 2) == doctest::Approx(-5001.2207).epsilon(1e-8));
    CHECK(hn_high(s, 1e4, 1) == -hn_high(s, 1e4, 2));
    CHECK_THROWS_AS(hn_high(s, 10.0, 2), RegimeError);

    PotentialSpec s2;
    s2.amp = 0.02;
    CHECK(k_high(s2, 2) == doctest::Approx(0.15002).epsilon(1e-5));
    CHECK(k_high(s2, 3) / k_high(s2, 2) == doctest::Approx(2.5 / 1.5).epsilon(1e-15));
    PotentialSpec steep = s2;
    steep.alpha = 200.0;
    steep.beta = 6.0;
    CHECK(k_high(steep, 2) == doctest::Approx(1.5 * std::sqrt(0.01)).epsilon(1e-15));
    CHECK_THROWS_AS(k_high(s2, 1), ArgumentError);
}
