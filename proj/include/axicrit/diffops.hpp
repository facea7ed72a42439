#pragma once

#include <cmath>

#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"

namespace axicrit {

// Second-order centered stencils in cylindrical (r, z). Radial ghosts come
// from the field's axis parity and outer boundary rule; z is periodic. The
// three modified Laplacians are discretized in conservative (flux) form so
// their M-matrix sign structure and summation-by-parts identities survive
// discretization. At the axis face r = 0 each operator gets the closure its
// flux actually has there for fields with the matching near-axis behavior:
//   (1/r) d_r(r d_r f):        flux r f_r -> 0
//   d_r((1/r) d_r(r f)):       flux (1/r)(r f)_r -> 2 f(0+)/r, odd f ~ c r
//   r d_r((1/r) d_r f):        flux (1/r) f_r  -> 2 f(0+)/r^2, swirl f ~ a r^2
//   (1/r^3) d_r(r^3 d_r f):    flux r^3 f_r -> 0

inline ScalarField d_r(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity == AxisParity::odd ? AxisParity::even : AxisParity::odd,
                    OuterBc::neumann_zero);
    const double inv2dr = 0.5 / g.dr;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            out.at(j, k) = (f.gval(j + 1, k) - f.gval(j - 1, k)) * inv2dr;
    return out;
}

inline ScalarField d_z(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, f.outer);
    const double inv2dz = 0.5 / g.dz;
    for (int k = 0; k < g.nz; ++k) {
        const int km = k == 0 ? g.nz - 1 : k - 1;
        const int kp = k == g.nz - 1 ? 0 : k + 1;
        for (int j = 0; j < g.nr; ++j)
            out.at(j, k) = (f.at(j, kp) - f.at(j, km)) * inv2dz;
    }
    return out;
}

namespace detail {

inline double d_zz_at(const ScalarField& f, const Grid& g, int j, int k) {
    const int km = k == 0 ? g.nz - 1 : k - 1;
    const int kp = k == g.nz - 1 ? 0 : k + 1;
    return (f.at(j, kp) - 2.0 * f.at(j, k) + f.at(j, km)) / (g.dz * g.dz);
}

} // namespace detail

// Axis-row stencils for the two evolved operators. The generic flux closure
// is only first-order-in-value at the axis cell, which the transformed
// variables J = -d_z Gamma / r^2 and Omega = omega / r amplify to O(1).
// These two-point rows are exact on the leading near-axis profiles
// ({r, r^3} for Delta - 1/r^2 on odd fields, {r^2, r^4} for the swirl
// operator), keep the off-diagonal nonnegative, and leave the row sum
// nonpositive, so the discrete maximum principle is unaffected.
namespace stencil {

inline double mi_axis_diag(double dr) { return -4.0 / (dr * dr); }
inline double mi_axis_upper(double dr) { return 4.0 / (3.0 * dr * dr); }
inline double gamma_axis_diag(double dr) { return -4.0 / (dr * dr); }
inline double gamma_axis_upper(double dr) { return 4.0 / (9.0 * dr * dr); }

} // namespace stencil

/// Delta f = (1/r) d_r(r d_r f) + d_zz f.
inline ScalarField laplacian_cyl(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, f.outer);
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            const double flux_up = g.r_face(j + 1) * (f.gval(j + 1, k) - f.at(j, k)) / g.dr;
            const double flux_dn =
                j == 0 ? 0.0 : g.r_face(j) * (f.at(j, k) - f.at(j - 1, k)) / g.dr;
            out.at(j, k) = (flux_up - flux_dn) / (g.r(j) * g.dr) + detail::d_zz_at(f, g, j, k);
        }
    }
    return out;
}

/// (Delta - 1/r^2) f = d_r((1/r) d_r(r f)) + d_zz f, for odd fields
/// (omega^theta, psi^theta, v^theta ~ c r near the axis).
inline ScalarField laplacian_minus_inv_r2(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, f.outer);
    const double r_ghost = g.r_max + 0.5 * g.dr;
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            if (j == 0) {
                out.at(0, k) = stencil::mi_axis_diag(g.dr) * f.at(0, k) +
                               stencil::mi_axis_upper(g.dr) * f.gval(1, k) +
                               detail::d_zz_at(f, g, 0, k);
                continue;
            }
            double flux_up;
            if (j + 1 < g.nr)
                flux_up = (g.r(j + 1) * f.at(j + 1, k) - g.r(j) * f.at(j, k)) /
                          (g.dr * g.r_face(j + 1));
            else
                flux_up = (r_ghost * f.gval(g.nr, k) - g.r(j) * f.at(j, k)) /
                          (g.dr * g.r_max);
            const double flux_dn = (g.r(j) * f.at(j, k) - g.r(j - 1) * f.at(j - 1, k)) /
                                   (g.dr * g.r_face(j));
            out.at(j, k) = (flux_up - flux_dn) / g.dr + detail::d_zz_at(f, g, j, k);
        }
    }
    return out;
}

/// (Delta - (2/r) d_r) f = r d_r((1/r) d_r f) + d_zz f, for swirl-like fields
/// with f ~ a(z) r^2 near the axis. The flux form keeps nonnegative
/// off-diagonal coefficients, which is what the discrete maximum principle
/// needs.
inline ScalarField laplacian_gamma_op(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, f.outer);
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            if (j == 0) {
                out.at(0, k) = stencil::gamma_axis_diag(g.dr) * f.at(0, k) +
                               stencil::gamma_axis_upper(g.dr) * f.at(1, k) +
                               detail::d_zz_at(f, g, 0, k);
                continue;
            }
            const double flux_up =
                (f.gval(j + 1, k) - f.at(j, k)) / (g.dr * g.r_face(j + 1));
            const double flux_dn = (f.at(j, k) - f.at(j - 1, k)) / (g.dr * g.r_face(j));
            out.at(j, k) = g.r(j) * (flux_up - flux_dn) / g.dr + detail::d_zz_at(f, g, j, k);
        }
    }
    return out;
}

/// (Delta + (2/r) d_r) f = (1/r^3) d_r(r^3 d_r f) + d_zz f, for even fields
/// finite at the axis (J, Omega, v^theta/r). The cell divisor is the exact
/// cell integral of r^3 dr, which keeps the stencil consistent at the axis
/// cell where the flux weight is strongly curved.
inline ScalarField laplacian_plus_2r_op(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, f.outer);
    auto face4 = [&](int j) {
        const double rf = g.r_face(j);
        return rf * rf * rf * rf;
    };
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            const double rf_up = g.r_face(j + 1);
            const double flux_up =
                rf_up * rf_up * rf_up * (f.gval(j + 1, k) - f.at(j, k)) / g.dr;
            double flux_dn = 0.0;
            if (j > 0) {
                const double rf = g.r_face(j);
                flux_dn = rf * rf * rf * (f.at(j, k) - f.at(j - 1, k)) / g.dr;
            }
            const double cellw = 0.25 * (face4(j + 1) - face4(j));
            out.at(j, k) = (flux_up - flux_dn) / cellw + detail::d_zz_at(f, g, j, k);
        }
    }
    return out;
}

struct VorticityTriple {
    ScalarField omega_r, omega_theta, omega_z;
};

/// omega^r = -d_z v^theta, omega^theta = d_z v^r - d_r v^z,
/// omega^z = (1/r) d_r(r v^theta).
inline VorticityTriple curl_axisym(const ScalarField& v_r, const ScalarField& v_theta,
                                   const ScalarField& v_z) {
    const Grid& g = *v_r.grid;
    VorticityTriple w;
    w.omega_r = d_z(v_theta);
    for (double& x : w.omega_r.v) x = -x;

    w.omega_theta = d_z(v_r);
    ScalarField drvz = d_r(v_z);
    for (std::size_t i = 0; i < w.omega_theta.v.size(); ++i)
        w.omega_theta.v[i] -= drvz.v[i];
    w.omega_theta.parity = AxisParity::odd;
    w.omega_theta.outer = OuterBc::dirichlet_zero;

    // (1/r) d_r(r v^theta) with signed ghost radii so r v^theta mirrors evenly.
    w.omega_z = ScalarField(g, AxisParity::even, OuterBc::dirichlet_zero);
    const double r_ghost = g.r_max + 0.5 * g.dr;
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            const double rp = j + 1 < g.nr ? g.r(j + 1) : r_ghost;
            const double rm = j > 0 ? g.r(j - 1) : -g.r(0);
            const double up = rp * v_theta.gval(j + 1, k);
            const double dn = rm * v_theta.gval(j - 1, k);
            w.omega_z.at(j, k) = (up - dn) / (2.0 * g.dr * g.r(j));
        }
    }
    return w;
}

struct DerivedFields {
    ScalarField J;     // -d_z v^theta / r
    ScalarField Omega; // omega^theta / r
    ScalarField V;     // v^theta / sqrt(r), cell centers only
};

inline DerivedFields derived_fields_of(const ScalarField& v_theta,
                                       const ScalarField& omega_theta) {
    const Grid& g = *v_theta.grid;
    DerivedFields d;
    d.J = d_z(v_theta);
    d.J.parity = AxisParity::even;
    d.J.outer = OuterBc::dirichlet_zero;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            d.J.at(j, k) = -d.J.at(j, k) / g.r(j);

    d.Omega = ScalarField(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            d.Omega.at(j, k) = omega_theta.at(j, k) / g.r(j);

    d.V = ScalarField(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            d.V.at(j, k) = v_theta.at(j, k) / std::sqrt(g.r(j));
    return d;
}

/// |grad v|^2 for the full 3D vector field: sum over components of
/// |d_r .|^2 + |d_z .|^2 plus the curvature terms (v^r/r)^2 + (v^theta/r)^2.
inline ScalarField gradient_sq_density(const ScalarField& v_r, const ScalarField& v_theta,
                                       const ScalarField& v_z) {
    const Grid& g = *v_r.grid;
    ScalarField out(g, AxisParity::even, OuterBc::neumann_zero);
    const double inv2dr = 0.5 / g.dr;
    const double inv2dz = 0.5 / g.dz;
    for (int k = 0; k < g.nz; ++k) {
        const int km = k == 0 ? g.nz - 1 : k - 1;
        const int kp = k == g.nz - 1 ? 0 : k + 1;
        for (int j = 0; j < g.nr; ++j) {
            const double rr = g.r(j);
            double acc = 0.0;
            for (const ScalarField* c : {&v_r, &v_theta, &v_z}) {
                const double fr = (c->gval(j + 1, k) - c->gval(j - 1, k)) * inv2dr;
                const double fz = (c->at(j, kp) - c->at(j, km)) * inv2dz;
                acc += fr * fr + fz * fz;
            }
            const double vrr = v_r.at(j, k) / rr;
            const double vtr = v_theta.at(j, k) / rr;
            out.at(j, k) = acc + vrr * vrr + vtr * vtr;
        }
    }
    return out;
}

/// |grad^2 f|^2 density for an axisymmetric scalar:
/// f_rr^2 + 2 f_rz^2 + f_zz^2 + (f_r/r)^2.
inline ScalarField hessian_sq_density(const ScalarField& f) {
    const Grid& g = *f.grid;
    ScalarField fr = d_r(f);
    ScalarField frz = d_z(fr);
    ScalarField out(g, AxisParity::even, OuterBc::neumann_zero);
    const double invdr2 = 1.0 / (g.dr * g.dr);
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            const double frr =
                (f.gval(j + 1, k) - 2.0 * f.at(j, k) + f.gval(j - 1, k)) * invdr2;
            const double fzz = detail::d_zz_at(f, g, j, k);
            const double mixed = frz.at(j, k);
            const double ang = fr.at(j, k) / g.r(j);
            out.at(j, k) = frr * frr + 2.0 * mixed * mixed + fzz * fzz + ang * ang;
        }
    }
    return out;
}

enum class AdvectionScheme { upwind1, centered2 };

/// b . grad f with b = (v_r, v_z). upwind1 is the monotone first-order
/// scheme the maximum-principle runs use; centered2 is the plain
/// second-order one the convergence runs use.
inline ScalarField advect(const ScalarField& v_r, const ScalarField& v_z,
                          const ScalarField& f, AdvectionScheme scheme) {
    const Grid& g = *f.grid;
    ScalarField out(g, f.parity, OuterBc::neumann_zero);
    const double invdr = 1.0 / g.dr;
    const double invdz = 1.0 / g.dz;
    for (int k = 0; k < g.nz; ++k) {
        const int km = k == 0 ? g.nz - 1 : k - 1;
        const int kp = k == g.nz - 1 ? 0 : k + 1;
        for (int j = 0; j < g.nr; ++j) {
            const double ur = v_r.at(j, k);
            const double uz = v_z.at(j, k);
            double dfr, dfz;
            if (scheme == AdvectionScheme::upwind1) {
                dfr = ur >= 0.0 ? (f.at(j, k) - f.gval(j - 1, k)) * invdr
                                : (f.gval(j + 1, k) - f.at(j, k)) * invdr;
                dfz = uz >= 0.0 ? (f.at(j, k) - f.at(j, km)) * invdz
                                : (f.at(j, kp) - f.at(j, k)) * invdz;
            } else {
                dfr = (f.gval(j + 1, k) - f.gval(j - 1, k)) * 0.5 * invdr;
                dfz = (f.at(j, kp) - f.at(j, km)) * 0.5 * invdz;
            }
            out.at(j, k) = ur * dfr + uz * dfz;
        }
    }
    return out;
}

/// Discrete divergence (1/r) d_r(r v^r) + d_z v^z with the same signed-radius
/// centered stencil the velocity reconstruction uses, so that streamfunction
/// velocities are divergence-free to roundoff.
inline ScalarField divergence(const ScalarField& v_r, const ScalarField& v_z) {
    const Grid& g = *v_r.grid;
    ScalarField out(g, AxisParity::even, OuterBc::neumann_zero);
    const double r_ghost = g.r_max + 0.5 * g.dr;
    const double inv2dz = 0.5 / g.dz;
    for (int k = 0; k < g.nz; ++k) {
        const int km = k == 0 ? g.nz - 1 : k - 1;
        const int kp = k == g.nz - 1 ? 0 : k + 1;
        for (int j = 0; j < g.nr; ++j) {
            const double rp = j + 1 < g.nr ? g.r(j + 1) : r_ghost;
            const double rm = j > 0 ? g.r(j - 1) : -g.r(0);
            const double radial = (rp * v_r.gval(j + 1, k) - rm * v_r.gval(j - 1, k)) /
                                  (2.0 * g.dr * g.r(j));
            out.at(j, k) = radial + (v_z.at(j, kp) - v_z.at(j, km)) * inv2dz;
        }
    }
    return out;
}

} // namespace axicrit
