#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "axicrit/diffops.hpp"
#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"
#include "test_helpers.hpp"

using namespace axicrit;
using axitest::SmoothRandomField;

namespace {

// Max |computed - exact| over interior cells (outer ring excluded: the probe
// profiles are not compatible with the Dirichlet boundary rule there).
double interior_error(const ScalarField& got,
                      const std::function<double(double, double)>& exact) {
    const Grid& g = *got.grid;
    double m = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr - 1; ++j)
            m = std::max(m, std::fabs(got.at(j, k) - exact(g.r(j), g.z(k))));
    return m;
}

} // namespace

TEST_CASE("centered first derivatives") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField r2(g, AxisParity::even, OuterBc::neumann_zero);
    r2.fill([](double r, double) { return r * r; });
    REQUIRE(interior_error(d_r(r2), [](double r, double) { return 2 * r; }) < 1e-12);

    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField sz(g, AxisParity::even, OuterBc::neumann_zero);
    sz.fill([&](double, double z) { return std::sin(kk * z); });
    const double errz =
        interior_error(d_z(sz), [&](double, double z) { return kk * std::cos(kk * z); });
    REQUIRE(errz < kk * kk * kk * g.dz * g.dz / 6 * 1.01);
}

TEST_CASE("d_r of an odd field is exact at the first cell for f = r") {
    Grid g = build_grid(16, 8, 1.0, 1.0);
    ScalarField f(g, AxisParity::odd, OuterBc::neumann_zero);
    f.fill([](double r, double) { return r; });
    ScalarField df = d_r(f);
    REQUIRE(df.at(0, 0) == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cylindrical laplacian") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField c(g, AxisParity::even, OuterBc::neumann_zero);
    c.fill([](double, double) { return 5.0; });
    REQUIRE(linf_norm(laplacian_cyl(c)) == 0.0);

    ScalarField r2(g, AxisParity::even, OuterBc::neumann_zero);
    r2.fill([](double r, double) { return r * r; });
    REQUIRE(interior_error(laplacian_cyl(r2), [](double, double) { return 4.0; }) < 1e-11);

    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField mix(g, AxisParity::even, OuterBc::neumann_zero);
    mix.fill([&](double r, double z) { return r * r * std::sin(kk * z); });
    auto exact = [&](double r, double z) {
        return (4.0 - kk * kk * r * r) * std::sin(kk * z);
    };
    const double ztrunc = std::pow(kk, 4) * g.dz * g.dz / 12.0;
    REQUIRE(interior_error(laplacian_cyl(mix), exact) < 1.3 * ztrunc);
}

TEST_CASE("laplacian minus 1/r^2") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField zero(g, AxisParity::odd);
    REQUIRE(linf_norm(laplacian_minus_inv_r2(zero)) == 0.0);

    ScalarField fr(g, AxisParity::odd, OuterBc::neumann_zero);
    fr.fill([](double r, double) { return r; });
    REQUIRE(interior_error(laplacian_minus_inv_r2(fr), [](double, double) { return 0.0; }) <
            1e-11);

    ScalarField r3(g, AxisParity::odd, OuterBc::neumann_zero);
    r3.fill([](double r, double) { return r * r * r; });
    // exact value 8 r; the axis closure is second order in the flux, so allow
    // the O(dr) one-cell defect there.
    ScalarField lap = laplacian_minus_inv_r2(r3);
    double err_away = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 1; j < g.nr - 1; ++j)
            err_away = std::max(err_away, std::fabs(lap.at(j, k) - 8.0 * g.r(j)));
    REQUIRE(err_away < 1e-10);
    REQUIRE(std::fabs(lap.at(0, 0) - 8.0 * g.r(0)) < g.dr);
}

TEST_CASE("swirl operator (Delta - 2/r d_r)") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    // rigid rotation is exactly steady
    ScalarField r2(g, AxisParity::even, OuterBc::neumann_zero);
    r2.fill([](double r, double) { return r * r; });
    REQUIRE(interior_error(laplacian_gamma_op(r2), [](double, double) { return 0.0; }) <
            1e-11);

    ScalarField r4(g, AxisParity::even, OuterBc::neumann_zero);
    r4.fill([](double r, double) { return r * r * r * r; });
    ScalarField lap4 = laplacian_gamma_op(r4);
    double worst_rel = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr - 1; ++j) {
            const double exact = 8.0 * g.r(j) * g.r(j);
            worst_rel = std::max(worst_rel, std::fabs(lap4.at(j, k) - exact));
        }
    REQUIRE(worst_rel < 20 * g.dr * g.dr);

    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField sep(g, AxisParity::even, OuterBc::neumann_zero);
    sep.fill([&](double r, double z) { return r * r * std::sin(kk * z); });
    auto exact = [&](double r, double z) {
        return -kk * kk * r * r * std::sin(kk * z);
    };
    const double ztrunc = std::pow(kk, 4) * g.dz * g.dz / 12.0;
    REQUIRE(interior_error(laplacian_gamma_op(sep), exact) < 1.3 * ztrunc);
}

TEST_CASE("operator (Delta + 2/r d_r)") {
    Grid g = build_grid(64, 64, 1.0, 1.0);

    ScalarField c(g, AxisParity::even, OuterBc::neumann_zero);
    c.fill([](double, double) { return 2.5; });
    REQUIRE(linf_norm(laplacian_plus_2r_op(c)) == 0.0);

    ScalarField r2(g, AxisParity::even, OuterBc::neumann_zero);
    r2.fill([](double r, double) { return r * r; });
    REQUIRE(interior_error(laplacian_plus_2r_op(r2), [](double, double) { return 8.0; }) <
            1e-10);

    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField cz(g, AxisParity::even, OuterBc::neumann_zero);
    cz.fill([&](double, double z) { return std::cos(kk * z); });
    auto exact = [&](double, double z) { return -kk * kk * std::cos(kk * z); };
    REQUIRE(interior_error(laplacian_plus_2r_op(cz), exact) <
            1.3 * std::pow(kk, 4) * g.dz * g.dz / 12.0);
}

TEST_CASE("curl of rigid rotation and of zero") {
    Grid g = build_grid(64, 64, 1.0, 1.0);
    ScalarField vr(g, AxisParity::odd), vz(g, AxisParity::even, OuterBc::neumann_zero);
    ScalarField vt(g, AxisParity::odd, OuterBc::neumann_zero);
    vt.fill([](double r, double) { return r; });

    VorticityTriple w = curl_axisym(vr, vt, vz);
    REQUIRE(linf_norm(w.omega_r) == 0.0);
    REQUIRE(linf_norm(w.omega_theta) == 0.0);
    REQUIRE(interior_error(w.omega_z, [](double, double) { return 2.0; }) < 1e-12);

    ScalarField z1(g, AxisParity::odd), z2(g, AxisParity::odd);
    ScalarField z3(g, AxisParity::even);
    VorticityTriple w0 = curl_axisym(z1, z2, z3);
    REQUIRE(linf_norm(w0.omega_r) == 0.0);
    REQUIRE(linf_norm(w0.omega_z) == 0.0);
}

TEST_CASE("curl of a swirling single mode") {
    Grid g = build_grid(96, 96, 1.0, 1.0);
    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField vr(g, AxisParity::odd), vz(g, AxisParity::even, OuterBc::neumann_zero);
    ScalarField vt(g, AxisParity::odd, OuterBc::neumann_zero);
    vt.fill([&](double r, double z) { return r * std::sin(kk * z); });

    VorticityTriple w = curl_axisym(vr, vt, vz);
    const double e1 = interior_error(
        w.omega_r, [&](double r, double z) { return -kk * r * std::cos(kk * z); });
    const double e2 = interior_error(
        w.omega_z, [&](double, double z) { return 2.0 * std::sin(kk * z); });
    REQUIRE(e1 < kk * kk * kk * g.dz * g.dz / 6 * 1.1);
    REQUIRE(e2 < 1e-11);
}

TEST_CASE("derived fields") {
    Grid g = build_grid(64, 64, 1.0, 1.0);
    const double kk = 2.0 * M_PI / g.z_len;

    ScalarField vt(g, AxisParity::odd, OuterBc::neumann_zero);
    vt.fill([&](double r, double z) { return r * std::sin(kk * z); });
    ScalarField om(g, AxisParity::odd);

    DerivedFields d = derived_fields_of(vt, om);
    const double eJ = interior_error(
        d.J, [&](double, double z) { return -kk * std::cos(kk * z); });
    REQUIRE(eJ < kk * kk * kk * g.dz * g.dz / 6 * 1.1);
    REQUIRE(linf_norm(d.Omega) == 0.0);

    ScalarField vt2(g, AxisParity::odd, OuterBc::neumann_zero);
    vt2.fill([](double r, double) { return r; });
    DerivedFields d2 = derived_fields_of(vt2, om);
    REQUIRE(interior_error(d2.V, [](double r, double) { return std::sqrt(r); }) < 1e-13);
    REQUIRE(linf_norm(d2.J) == 0.0);
}

TEST_CASE("J computed via omega^r/r equals the direct route exactly") {
    Grid g = build_grid(48, 48, 1.0, 1.0);
    SmoothRandomField rnd(31, 0.5, g.z_len, 1);
    ScalarField vt = axitest::sample(g, AxisParity::odd, rnd);
    ScalarField vr(g, AxisParity::odd), vz(g, AxisParity::even);
    ScalarField om(g, AxisParity::odd);

    VorticityTriple w = curl_axisym(vr, vt, vz);
    DerivedFields d = derived_fields_of(vt, om);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j) {
            const double via_curl = w.omega_r.at(j, k) / g.r(j);
            REQUIRE(std::fabs(via_curl - d.J.at(j, k)) <= 1e-12);
        }
}

TEST_CASE("gradient density of rigid rotation") {
    Grid g = build_grid(64, 64, 1.0, 1.0);
    ScalarField vr(g, AxisParity::odd), vz(g, AxisParity::even, OuterBc::neumann_zero);
    ScalarField vt(g, AxisParity::odd, OuterBc::neumann_zero);
    vt.fill([](double r, double) { return r; });
    ScalarField dens = gradient_sq_density(vr, vt, vz);
    REQUIRE(interior_error(dens, [](double, double) { return 2.0; }) < 1e-12);

    ScalarField zvt(g, AxisParity::odd);
    ScalarField zero_dens = gradient_sq_density(vr, zvt, vz);
    REQUIRE(linf_norm(zero_dens) == 0.0);
}

TEST_CASE("discrete integration by parts for the cylindrical laplacian") {
    // quadrature(f * Lap g) telescopes to minus the face-based Dirichlet
    // pairing for fields vanishing near r_max.
    Grid g = build_grid(48, 40, 1.0, 1.0);
    SmoothRandomField ra(5, 0.5, g.z_len, 2), rb(6, 0.55, g.z_len, 2);
    ScalarField f = axitest::sample(g, AxisParity::even, ra);
    ScalarField h = axitest::sample(g, AxisParity::even, rb);

    ScalarField lap = laplacian_cyl(h);
    const double lhs = quadrature(g, [&] {
        ScalarField prod(g, AxisParity::even);
        for (std::size_t i = 0; i < prod.v.size(); ++i) prod.v[i] = f.v[i] * lap.v[i];
        return prod;
    }());

    double rhs = 0.0; // face-based grad f . grad h, r faces then z faces
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j + 1 < g.nr; ++j) {
            const double df = (f.at(j + 1, k) - f.at(j, k)) / g.dr;
            const double dh = (h.at(j + 1, k) - h.at(j, k)) / g.dr;
            rhs += g.r_face(j + 1) * df * dh * g.dr * g.dz;
        }
        const int kp = k == g.nz - 1 ? 0 : k + 1;
        for (int j = 0; j < g.nr; ++j) {
            const double df = (f.at(j, kp) - f.at(j, k)) / g.dz;
            const double dh = (h.at(j, kp) - h.at(j, k)) / g.dz;
            rhs += g.r(j) * df * dh * g.dr * g.dz;
        }
    }
    REQUIRE(lhs == Catch::Approx(-rhs).margin(1e-10 * std::max(1.0, std::fabs(rhs))));
}

TEST_CASE("algebraic link between the omega and Omega operators") {
    // (Delta - 1/r^2)(r h) = r (Delta + 2/r d_r) h for smooth h vanishing
    // near r_max; discretely the two agree at second order under refinement.
    double prev = 0.0;
    for (int n : {32, 64, 128}) {
        Grid g = build_grid(n, n, 1.0, 1.0);
        SmoothRandomField rh(42, 0.5, g.z_len, 2);
        ScalarField h = axitest::sample(g, AxisParity::even, rh);
        ScalarField rh_field(g, AxisParity::odd);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.nr; ++j)
                rh_field.at(j, k) = g.r(j) * h.at(j, k);

        ScalarField a = laplacian_minus_inv_r2(rh_field);
        ScalarField b = laplacian_plus_2r_op(h);
        double err = 0.0;
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.nr - 1; ++j)
                err = std::max(err, std::fabs(a.at(j, k) - g.r(j) * b.at(j, k)));
        if (prev > 0.0) REQUIRE(axitest::observed_order(prev, err) > 1.6);
        prev = err;
    }
}

TEST_CASE("advection schemes agree on linear fields where smooth") {
    Grid g = build_grid(32, 32, 1.0, 1.0);
    ScalarField vr(g, AxisParity::odd), vz(g, AxisParity::even, OuterBc::neumann_zero);
    vr.fill([](double r, double) { return 0.3 * r; });
    vz.fill([](double, double) { return -0.7; });
    ScalarField f(g, AxisParity::even, OuterBc::neumann_zero);
    const double kk = 2.0 * M_PI / g.z_len;
    f.fill([&](double r, double z) { return r * r + 0.2 * std::sin(kk * z); });

    ScalarField a_up = advect(vr, vz, f, AdvectionScheme::upwind1);
    ScalarField a_ce = advect(vr, vz, f, AdvectionScheme::centered2);
    auto exact = [&](double r, double z) {
        return 0.3 * r * 2 * r - 0.7 * 0.2 * kk * std::cos(kk * z);
    };
    REQUIRE(interior_error(a_ce, exact) < 1.3 * 0.14 * std::pow(kk, 3) * g.dz * g.dz / 6.0);
    REQUIRE(interior_error(a_up, exact) < 0.3 * 2 * g.dr + 0.7 * 0.2 * kk * kk * g.dz);
}

TEST_CASE("divergence stencil is consistent on an analytic solenoidal pair") {
    // Sampled analytic fields are only divergence-free up to truncation; the
    // roundoff-zero property belongs to discretely reconstructed pairs and is
    // covered by the elliptic tests.
    Grid g = build_grid(32, 32, 1.0, 1.0);
    const double kk = 2.0 * M_PI / g.z_len;
    ScalarField vr(g, AxisParity::odd);
    vr.fill([&](double r, double z) { return -r * kk * std::cos(kk * z); });
    ScalarField vz(g, AxisParity::even, OuterBc::neumann_zero);
    vz.fill([&](double, double z) { return 2.0 * std::sin(kk * z); });
    ScalarField div = divergence(vr, vz);
    REQUIRE(axitest::max_abs_interior(div) < 1.3 * 2.0 * std::pow(kk, 3) * g.dz * g.dz / 6.0);
}
