#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"
#include "test_helpers.hpp"

using namespace axicrit;

TEST_CASE("cell centers stay off the axis and match the staggering") {
    Grid g = build_grid(4, 4, 1.0, 1.0);
    REQUIRE(g.r(0) == Catch::Approx(0.125));
    REQUIRE(g.r(1) == Catch::Approx(0.375));
    REQUIRE(g.r(2) == Catch::Approx(0.625));
    REQUIRE(g.r(3) == Catch::Approx(0.875));
    for (int j = 0; j < g.nr; ++j) REQUIRE(g.r(j) > 0.0);
}

TEST_CASE("weight sum equals the analytic integral of r dr dz") {
    for (auto [nr, nz, rm, zl] : {std::tuple{4, 4, 1.0, 1.0}, {8, 8, 2.0, 1.0},
                                  {64, 32, 1.5, 2.5}, {127, 65, 0.3, 7.0}}) {
        Grid g = build_grid(nr, nz, rm, zl);
        double sum = 0.0;
        for (int j = 0; j < g.nr; ++j) sum += g.weight(j) * g.nz;
        const double exact = rm * rm * zl / 2.0;
        REQUIRE(sum == Catch::Approx(exact).epsilon(1e-12));
        REQUIRE(g.weight_sum() == Catch::Approx(exact).epsilon(1e-15));
    }
}

TEST_CASE("bad grid parameters are rejected") {
    REQUIRE_THROWS_AS(build_grid(3, 8, 1.0, 1.0), ConfigError);
    REQUIRE_THROWS_AS(build_grid(8, 3, 1.0, 1.0), ConfigError);
    REQUIRE_THROWS_AS(build_grid(8, 8, 0.0, 1.0), ConfigError);
    REQUIRE_THROWS_AS(build_grid(8, 8, 1.0, -2.0), ConfigError);
    REQUIRE_THROWS_AS(build_grid(8, 8, std::nan(""), 1.0), ConfigError);
}

TEST_CASE("quadrature of simple profiles") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField one(g, AxisParity::even, OuterBc::neumann_zero);
    one.fill([](double, double) { return 1.0; });
    REQUIRE(quadrature(g, one) == Catch::Approx(0.5).epsilon(1e-12));

    ScalarField fr(g, AxisParity::odd);
    fr.fill([](double r, double) { return r; });
    REQUIRE(std::fabs(quadrature(g, fr) - 1.0 / 3.0) < 1e-4);

    ScalarField sz(g, AxisParity::odd);
    sz.fill([&](double r, double z) { return r * std::sin(2.0 * M_PI * z / g.z_len); });
    REQUIRE(std::fabs(quadrature(g, sz)) < 1e-12);
}

TEST_CASE("quadrature shape mismatch is a contract violation") {
    Grid g = build_grid(8, 8, 1.0, 1.0);
    Grid h = build_grid(16, 8, 1.0, 1.0);
    ScalarField f(h, AxisParity::even);
    REQUIRE_THROWS_AS(quadrature(g, f), InternalError);
}

TEST_CASE("quadrature converges at second order for r^p profiles") {
    // z part carries a full cosine period, which the rectangle rule
    // integrates exactly; the measured error is the radial midpoint error.
    const double rm = 1.0, zl = 1.0;
    for (int p = 1; p <= 3; ++p) {
        const double exact = zl * std::pow(rm, p + 2) / (p + 2);
        double prev_err = 0.0;
        for (int n : {32, 64, 128}) {
            Grid g = build_grid(n, n, rm, zl);
            ScalarField f(g, AxisParity::even, OuterBc::neumann_zero);
            f.fill([&](double r, double z) {
                return std::pow(r, p) * (1.0 + std::cos(2.0 * M_PI * z / zl));
            });
            const double err = std::fabs(quadrature(g, f) - exact);
            if (prev_err > 0.0) {
                const double order = axitest::observed_order(prev_err, err);
                REQUIRE(order > 1.9);
            }
            prev_err = err;
        }
    }
}
