#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axicrit/axicrit.hpp"
#include "test_helpers.hpp"

using namespace axicrit;

TEST_CASE("FBC estimates vanish for zero swirl") {
    Grid g = build_grid(32, 32, 2.0, 2.0);
    ScalarField vt(g, AxisParity::odd);
    auto fam = make_fbc_family(g.r_max, g.z_len, g.nr, 0.25, 4, 11);
    FbcReport rep = fbc_report(vt, fam, 0.5, {0.0, 1.0, 5.0});
    for (double c : rep.cstar_est) REQUIRE(c == 0.0);
    for (double d : rep.deltastar_est) REQUIRE(d == 0.0);
}

TEST_CASE("empty or all-degenerate families are configuration errors") {
    Grid g = build_grid(16, 16, 1.0, 1.0);
    ScalarField vt(g, AxisParity::odd);
    REQUIRE_THROWS_AS(fbc_report(vt, {}, 0.25, {0.0}), ConfigError);
    std::vector<FbcTestFunction> degen;
    degen.push_back({"const", [](double) { return 1.0; }, [](double) { return 0.0; },
                     [](double) { return 1.0; }});
    REQUIRE_THROWS_AS(fbc_report(vt, degen, 0.25, {0.0}), ConfigError);
}

TEST_CASE("v^theta = r reduces to Rayleigh quotients of the family") {
    // |v^theta|/r = 1, so A1(f) = ||f||^2 and with C0 = 0 the estimate is
    // max ||f||^2 / B(f); with C0 >= 1 and r0 -> 0 the remainder eats A1.
    Grid g = build_grid(64, 32, 1.0, 1.0);
    ScalarField vt(g, AxisParity::odd, OuterBc::neumann_zero);
    vt.fill([](double r, double) { return r; });
    auto fam = make_fbc_family(g.r_max, g.z_len, g.nr, 0.2, 3, 5);

    const double r0_tiny = g.r(0); // every cell counts as "large r"
    FbcReport rep = fbc_report(vt, fam, r0_tiny, {0.0, 1.0});

    // oracle: direct quadrature Rayleigh quotient per family member
    double best = 0.0;
    for (const auto& f : fam) {
        double a1 = 0.0, b = 0.0;
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.nr; ++j) {
                const double fv = f.rho(g.r(j)) * f.zeta(g.z(k));
                const double dfv = f.drho(g.r(j)) * f.zeta(g.z(k));
                a1 += fv * fv * g.weight(j);
                b += dfv * dfv * g.weight(j);
            }
        if (b > 0.0) best = std::max(best, a1 / b);
    }
    REQUIRE(rep.cstar_est[0] == Catch::Approx(best).epsilon(1e-10));
    REQUIRE(rep.cstar_est[1] == 0.0); // C0 = 1 >= |v|/r kills the excess
}

TEST_CASE("FBC ratios are invariant under the natural rescaling (PDE grid)") {
    // lambda v(lambda x) on the lambda-shrunk grid with r0 -> r0/lambda and
    // C0 -> lambda^2 C0 reproduces every Rayleigh ratio.
    const double lam = 2.0;
    auto vth = [](double r, double z) {
        return r * plateau(r, 0.35, 0.8) * (1.0 + 0.4 * std::cos(M_PI * z));
    };

    Grid ga = build_grid(64, 64, 2.0, 2.0);
    ScalarField va(ga, AxisParity::odd);
    va.fill(vth);
    auto fama = make_fbc_family(ga.r_max, ga.z_len, ga.nr, 0.2, 3, 5);
    FbcReport ra = fbc_report(va, fama, 0.5, {0.0, 0.7, 2.0});

    Grid gb = build_grid(64, 64, 1.0, 1.0);
    ScalarField vb(gb, AxisParity::odd);
    vb.fill([&](double r, double z) { return lam * vth(lam * r, lam * z); });
    // family members evaluated at the rescaled radii/heights
    std::vector<FbcTestFunction> famb;
    for (const auto& f : fama)
        famb.push_back({f.name,
                        [rho = f.rho, lam](double r) { return rho(lam * r); },
                        [drho = f.drho, lam](double r) { return lam * drho(lam * r); },
                        [zeta = f.zeta, lam](double z) { return zeta(lam * z); }});
    FbcReport rb =
        fbc_report(vb, famb, 0.5 / lam, {0.0, lam * lam * 0.7, lam * lam * 2.0});

    for (std::size_t i = 0; i < ra.cstar_est.size(); ++i) {
        REQUIRE(rb.cstar_est[i] ==
                Catch::Approx(ra.cstar_est[i]).epsilon(1e-3).margin(1e-12));
        REQUIRE(rb.deltastar_est[i] ==
                Catch::Approx(ra.deltastar_est[i]).epsilon(1e-3).margin(1e-12));
    }
}

TEST_CASE("FBC ratios are invariant under rescaling on the lab mesh") {
    const double lam = 2.0;
    LabMesh ma = make_lab_mesh(8192, 1e-8, 1.0);
    LabMesh mb = make_lab_mesh(8192, 1e-8 / lam, 1.0 / lam);

    auto vth = [](double r) { return r * plateau(r, 0.2, 0.45); };
    RadialProfile va = RadialProfile::from(ma, 0.9, vth, [](double) { return 0.0; });
    RadialProfile vb = RadialProfile::from(
        mb, 0.9 / lam, [&](double r) { return lam * vth(lam * r); },
        [](double) { return 0.0; });

    const double delta = 0.1;
    RadialProfile fa = cutoff_profile(ma, delta);
    RadialProfile fb = RadialProfile::from(
        mb, 2 * delta / lam,
        [&](double r) { return plateau(lam * r, delta, 2 * delta); },
        [&](double r) { return lam * plateau_deriv(lam * r, delta, 2 * delta); });

    for (double c0 : {0.0, 0.4, 3.0}) {
        FbcRatios1D qa = fbc_ratios_1d(va, fa, 0.25, c0);
        FbcRatios1D qb = fbc_ratios_1d(vb, fb, 0.25 / lam, lam * lam * c0);
        REQUIRE(qb.ratio1 == Catch::Approx(qa.ratio1).epsilon(1e-10).margin(1e-14));
        REQUIRE(qb.ratio2 == Catch::Approx(qa.ratio2).epsilon(1e-10).margin(1e-14));
    }
}
