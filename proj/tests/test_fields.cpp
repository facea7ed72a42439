#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"
#include "test_helpers.hpp"

using namespace axicrit;
using axitest::SmoothRandomField;

TEST_CASE("weighted L2 norm basics") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField one(g, AxisParity::even, OuterBc::neumann_zero);
    one.fill([](double, double) { return 1.0; });
    REQUIRE(weighted_l2_norm(one) == Catch::Approx(std::sqrt(0.5)).epsilon(1e-12));

    ScalarField fr(g, AxisParity::odd);
    fr.fill([](double r, double) { return r; });
    REQUIRE(std::fabs(weighted_l2_norm(fr) - 0.5) < 1e-3);
}

TEST_CASE("weighted L2 norm matches an independent quadrature oracle") {
    Grid g = build_grid(48, 40, 1.3, 2.0);
    SmoothRandomField rnd(1234, 0.6, g.z_len, 1);
    ScalarField f = axitest::sample(g, AxisParity::odd, rnd);
    ScalarField f2(g, AxisParity::even);
    for (std::size_t i = 0; i < f.v.size(); ++i) f2.v[i] = f.v[i] * f.v[i];
    const double oracle = std::sqrt(axitest::quadrature_oracle(g, f2));
    REQUIRE(weighted_l2_norm(f) == Catch::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("Linf norm") {
    Grid g = build_grid(32, 16, 1.0, 1.0);
    ScalarField z(g, AxisParity::even);
    REQUIRE(linf_norm(z) == 0.0);

    ScalarField fr(g, AxisParity::odd);
    fr.fill([](double r, double) { return r; });
    REQUIRE(linf_norm(fr) == Catch::Approx(1.0 - g.dr / 2).epsilon(1e-14));

    ScalarField gam(g, AxisParity::even);
    gam.fill([](double r, double) { return r * r; });
    const double rlast = g.r_max - g.dr / 2;
    REQUIRE(linf_norm(gam) == Catch::Approx(rlast * rlast).epsilon(1e-14));
}

TEST_CASE("weighted Lp norms") {
    Grid g = build_grid(64, 64, 1.0, 1.0);
    ScalarField one(g, AxisParity::even, OuterBc::neumann_zero);
    one.fill([](double, double) { return 1.0; });
    REQUIRE(weighted_lp_norm(one, 3.0) ==
            Catch::Approx(std::pow(0.5, 1.0 / 3.0)).epsilon(1e-12));
    REQUIRE(weighted_lp_norm(one, 4.0) ==
            Catch::Approx(std::pow(0.5, 1.0 / 4.0)).epsilon(1e-12));

    ScalarField fr(g, AxisParity::odd);
    fr.fill([](double r, double) { return r; });
    REQUIRE(std::fabs(weighted_lp_norm(fr, 4.0) - std::pow(1.0 / 6.0, 0.25)) < 1e-3);
}

TEST_CASE("axis trace") {
    Grid g = build_grid(64, 64, 1.0, 2.0);

    ScalarField c(g, AxisParity::even, OuterBc::neumann_zero);
    c.fill([](double, double) { return -3.0; });
    REQUIRE(axis_trace_sq_integral(c) == Catch::Approx(9.0 * g.z_len).epsilon(1e-12));

    // J from v^theta = r sin(2 pi z / L) is -k cos(k z) on the axis, so the
    // trace integral is k^2 L / 2.
    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField J(g, AxisParity::even);
    J.fill([&](double, double z) { return -kk * std::cos(kk * z); });
    REQUIRE(axis_trace_sq_integral(J) ==
            Catch::Approx(kk * kk * g.z_len / 2).epsilon(1e-6));

    ScalarField odd(g, AxisParity::odd);
    odd.fill([](double r, double) { return r; });
    REQUIRE(axis_trace_sq_integral(odd) == 0.0);
}

TEST_CASE("axis trace of a quadratic even profile is second-order exact") {
    // f = 4 + r^2 extrapolates to exactly 4 at the axis.
    Grid g = build_grid(16, 8, 1.0, 1.0);
    ScalarField f(g, AxisParity::even, OuterBc::neumann_zero);
    f.fill([](double r, double) { return 4.0 + r * r; });
    REQUIRE(axis_trace_sq_integral(f) == Catch::Approx(16.0 * g.z_len).epsilon(1e-13));
}

TEST_CASE("norm homogeneity and triangle inequality") {
    Grid g = build_grid(40, 48, 1.0, 1.5);
    SmoothRandomField ra(77, 0.5, g.z_len, 1), rb(78, 0.5, g.z_len, 2);
    ScalarField a = axitest::sample(g, AxisParity::odd, ra);
    ScalarField b = axitest::sample(g, AxisParity::even, rb);

    const double c = -3.7;
    ScalarField ca = a;
    for (double& x : ca.v) x *= c;
    REQUIRE(weighted_l2_norm(ca) ==
            Catch::Approx(std::fabs(c) * weighted_l2_norm(a)).epsilon(1e-14));

    ScalarField sum = a;
    for (std::size_t i = 0; i < sum.v.size(); ++i) sum.v[i] += b.v[i];
    REQUIRE(weighted_l2_norm(sum) <=
            weighted_l2_norm(a) + weighted_l2_norm(b) + 1e-14);
}

TEST_CASE("ghost values follow parity and outer rules") {
    Grid g = build_grid(8, 8, 1.0, 1.0);
    ScalarField odd(g, AxisParity::odd, OuterBc::dirichlet_zero);
    odd.fill([](double r, double z) { return r + z; });
    REQUIRE(odd.gval(-1, 2) == Catch::Approx(-odd.at(0, 2)));
    REQUIRE(odd.gval(g.nr, 2) == Catch::Approx(-odd.at(g.nr - 1, 2)));

    ScalarField even(g, AxisParity::even, OuterBc::neumann_zero);
    even.fill([](double r, double z) { return r * r + z; });
    REQUIRE(even.gval(-1, 3) == Catch::Approx(even.at(0, 3)));
    REQUIRE(even.gval(g.nr, 3) == Catch::Approx(even.at(g.nr - 1, 3)));

    // z wraps periodically
    REQUIRE(even.gval(2, -1) == Catch::Approx(even.at(2, g.nz - 1)));
    REQUIRE(even.gval(2, g.nz) == Catch::Approx(even.at(2, 0)));
}

TEST_CASE("non-finite values are detected") {
    Grid g = build_grid(8, 8, 1.0, 1.0);
    ScalarField f(g, AxisParity::even);
    REQUIRE(!first_nonfinite(f).has_value());
    f.at(3, 4) = std::nan("");
    REQUIRE(first_nonfinite(f).has_value());
    REQUIRE(*first_nonfinite(f) == g.idx(3, 4));
}
