#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "axicrit/diffops.hpp"
#include "axicrit/elliptic.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/field.hpp"
#include "axicrit/state.hpp"

namespace axicrit {

/// Optional source terms (r, z, t) -> value, used by the manufactured-solution
/// fixture. Zero-initialized means no forcing.
struct Forcing {
    std::function<double(double, double, double)> gamma;
    std::function<double(double, double, double)> omega_theta;
    bool active() const { return static_cast<bool>(gamma) || static_cast<bool>(omega_theta); }
};

struct StepperOptions {
    double nu = 1.0;
    double cfl_safety = 0.3;
    AdvectionScheme scheme = AdvectionScheme::upwind1;
};

/// Explicit SSP-RK3 integrator for the (Gamma, omega^theta) system
///   d_t Gamma + b.grad Gamma = nu (Delta - (2/r) d_r) Gamma
///   d_t omega + b.grad omega - (v^r/r) omega
///       = nu (Delta - 1/r^2) omega + d_z(Gamma^2 / r^3)
/// with the streamfunction re-solved after every stage.
class TimeStepper {
public:
    TimeStepper(const StreamSolver& elliptic, StepperOptions opt, Forcing forcing = {})
        : elliptic_(&elliptic), opt_(opt), forcing_(std::move(forcing)) {
        if (!(opt_.nu > 0.0)) throw ConfigError("stepper: nu must be positive");
        if (!(opt_.cfl_safety > 0.0 && opt_.cfl_safety <= 1.0))
            throw ConfigError("stepper: cfl_safety must be in (0, 1]");
    }

    const StepperOptions& options() const { return opt_; }

    ScalarField rhs_gamma(const FlowState& s) const {
        const Grid& g = s.grid();
        ScalarField adv = advect(s.v_r, s.v_z, s.gamma, opt_.scheme);
        ScalarField lap = laplacian_gamma_op(s.gamma);
        ScalarField out(g, s.gamma.parity, s.gamma.outer);
        for (std::size_t i = 0; i < out.v.size(); ++i)
            out.v[i] = -adv.v[i] + opt_.nu * lap.v[i];
        return out;
    }

    ScalarField rhs_omega_theta(const FlowState& s) const {
        const Grid& g = s.grid();
        ScalarField adv = advect(s.v_r, s.v_z, s.omega_theta, opt_.scheme);
        ScalarField lap = laplacian_minus_inv_r2(s.omega_theta);

        // Swirl source d_z((v^theta)^2 / r) written as d_z(Gamma^2 / r^3),
        // finite at the axis since Gamma ~ r^2.
        ScalarField sw(g, AxisParity::odd, OuterBc::dirichlet_zero);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.nr; ++j) {
                const double gam = s.gamma.at(j, k);
                const double rr = g.r(j);
                sw.at(j, k) = gam * gam / (rr * rr * rr);
            }
        ScalarField dsw = d_z(sw);

        ScalarField out(g, s.omega_theta.parity, s.omega_theta.outer);
        for (int k = 0; k < g.nz; ++k)
            for (int j = 0; j < g.nr; ++j) {
                const std::size_t i = g.idx(j, k);
                out.v[i] = -adv.v[i] + s.v_r.at(j, k) / g.r(j) * s.omega_theta.v[i] +
                           opt_.nu * lap.v[i] + dsw.v[i];
            }
        return out;
    }

    /// dt = cfl_safety * min(h^2/(4 nu), h / max|v|), h = min(dr, dz).
    double cfl_dt(const FlowState& s) const {
        const Grid& g = s.grid();
        double vmax = 0.0;
        for (std::size_t i = 0; i < g.cells(); ++i) {
            vmax = std::max(vmax, std::fabs(s.v_r.v[i]));
            vmax = std::max(vmax, std::fabs(s.v_z.v[i]));
            vmax = std::max(vmax, std::fabs(s.v_theta.v[i]));
        }
        const double h = std::min(g.dr, g.dz);
        const double dt_diff = h * h / (4.0 * opt_.nu);
        const double dt_adv = h / std::max(vmax, 1e-14);
        return opt_.cfl_safety * std::min(dt_diff, dt_adv);
    }

    /// One SSP-RK3 step; each stage re-solves psi and rebuilds the velocity
    /// caches, so the returned state is fully consistent at time t + dt.
    void step(FlowState& s, double dt) const {
        const double t0 = s.time;

        FlowState u1 = s;
        stage_update(u1, s, s, 1.0, 0.0, dt, t0, 1);

        FlowState u2 = u1;
        stage_update(u2, s, u1, 0.25, 0.75, dt * 0.25, t0 + dt, 2);

        stage_update(s, s, u2, 2.0 / 3.0, 1.0 / 3.0, dt * 2.0 / 3.0, t0 + 0.5 * dt, 3);
        s.time = t0 + dt;

        check_divergence(s);
    }

private:
    // out.gamma = w_old * old.gamma + w_src * (src.gamma + ...) with the rhs
    // evaluated on src at stage time t_rhs; combined Shu-Osher form
    // out = w_old * old + w_src * src + dt_eff * L(src).
    void stage_update(FlowState& out, const FlowState& old, const FlowState& src,
                      double w_src, double w_old, double dt_eff, double t_rhs,
                      int stage) const {
        const Grid& g = src.grid();
        ScalarField rg = rhs_gamma(src);
        ScalarField ro = rhs_omega_theta(src);
        if (forcing_.active()) add_forcing(rg, ro, t_rhs);

        ScalarField ng(g, old.gamma.parity, old.gamma.outer);
        ScalarField no(g, old.omega_theta.parity, old.omega_theta.outer);
        for (std::size_t i = 0; i < g.cells(); ++i) {
            ng.v[i] = w_old * old.gamma.v[i] + w_src * src.gamma.v[i] + dt_eff * rg.v[i];
            no.v[i] = w_old * old.omega_theta.v[i] + w_src * src.omega_theta.v[i] +
                      dt_eff * ro.v[i];
        }
        out.gamma = std::move(ng);
        out.omega_theta = std::move(no);
        out.time = t_rhs;

        if (first_nonfinite(out.gamma))
            throw BlowupError(t_rhs, stage, "gamma");
        if (first_nonfinite(out.omega_theta))
            throw BlowupError(t_rhs, stage, "omega_theta");
        refresh_derived(out, *elliptic_);
    }

    void add_forcing(ScalarField& rg, ScalarField& ro, double t) const {
        const Grid& g = *rg.grid;
        if (forcing_.gamma)
            for (int k = 0; k < g.nz; ++k)
                for (int j = 0; j < g.nr; ++j)
                    rg.at(j, k) += forcing_.gamma(g.r(j), g.z(k), t);
        if (forcing_.omega_theta)
            for (int k = 0; k < g.nz; ++k)
                for (int j = 0; j < g.nr; ++j)
                    ro.at(j, k) += forcing_.omega_theta(g.r(j), g.z(k), t);
    }

    void check_divergence(const FlowState& s) const {
        ScalarField div = divergence(s.v_r, s.v_z);
        const double dn = weighted_l2_norm(div);
        const double vn = std::sqrt(kinetic_energy(s));
        if (dn > 1e-10 * vn + 1e-300)
            throw InternalError("divergence-free reconstruction violated: |div|=" +
                                std::to_string(dn) + " vs |v|=" + std::to_string(vn));
    }

    const StreamSolver* elliptic_;
    StepperOptions opt_;
    Forcing forcing_;
};

namespace detail {

inline FlowState midpoint_state(const FlowState& a, const FlowState& b) {
    FlowState m = a;
    auto avg = [](ScalarField& x, const ScalarField& y) {
        for (std::size_t i = 0; i < x.v.size(); ++i) x.v[i] = 0.5 * (x.v[i] + y.v[i]);
    };
    avg(m.gamma, b.gamma);
    avg(m.omega_theta, b.omega_theta);
    avg(m.psi_theta, b.psi_theta);
    avg(m.v_r, b.v_r);
    avg(m.v_z, b.v_z);
    avg(m.v_theta, b.v_theta);
    m.time = 0.5 * (a.time + b.time);
    return m;
}

inline ScalarField over_r(const ScalarField& f, AxisParity parity) {
    const Grid& g = *f.grid;
    ScalarField out(g, parity, f.outer);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            out.at(j, k) = f.at(j, k) / g.r(j);
    return out;
}

} // namespace detail

/// Residual of d_t J + b.grad J = nu (Delta + (2/r) d_r) J
///                                + (omega^r d_r + omega^z d_z)(v^r / r)
/// evaluated with a centered time difference between two consecutive solver
/// states and spatial operators at the midpoint state.
inline ScalarField residual_J_equation(const FlowState& prev, const FlowState& next,
                                       double nu) {
    const Grid& g = prev.grid();
    const double dt = next.time - prev.time;
    FlowState mid = detail::midpoint_state(prev, next);

    ScalarField Jp = derived_fields_of(prev.v_theta, prev.omega_theta).J;
    ScalarField Jn = derived_fields_of(next.v_theta, next.omega_theta).J;
    ScalarField Jm = derived_fields_of(mid.v_theta, mid.omega_theta).J;

    ScalarField adv = advect(mid.v_r, mid.v_z, Jm, AdvectionScheme::centered2);
    ScalarField diff = laplacian_plus_2r_op(Jm);

    VorticityTriple w = curl_axisym(mid.v_r, mid.v_theta, mid.v_z);
    ScalarField vr_over_r = detail::over_r(mid.v_r, AxisParity::even);
    ScalarField sr = d_r(vr_over_r);
    ScalarField sz = d_z(vr_over_r);

    ScalarField res(g, AxisParity::even, OuterBc::neumann_zero);
    for (std::size_t i = 0; i < g.cells(); ++i)
        res.v[i] = (Jn.v[i] - Jp.v[i]) / dt + adv.v[i] - nu * diff.v[i] -
                   (w.omega_r.v[i] * sr.v[i] + w.omega_z.v[i] * sz.v[i]);
    return res;
}

/// Residual of d_t Omega + b.grad Omega = nu (Delta + (2/r) d_r) Omega
///                                        - 2 (v^theta / r) J.
inline ScalarField residual_Omega_equation(const FlowState& prev, const FlowState& next,
                                           double nu) {
    const Grid& g = prev.grid();
    const double dt = next.time - prev.time;
    FlowState mid = detail::midpoint_state(prev, next);

    ScalarField Op = detail::over_r(prev.omega_theta, AxisParity::even);
    ScalarField On = detail::over_r(next.omega_theta, AxisParity::even);
    ScalarField Om = detail::over_r(mid.omega_theta, AxisParity::even);

    ScalarField adv = advect(mid.v_r, mid.v_z, Om, AdvectionScheme::centered2);
    ScalarField diff = laplacian_plus_2r_op(Om);
    ScalarField Jm = derived_fields_of(mid.v_theta, mid.omega_theta).J;

    ScalarField res(g, AxisParity::even, OuterBc::neumann_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j) {
            const std::size_t i = g.idx(j, k);
            res.v[i] = (On.v[i] - Op.v[i]) / dt + adv.v[i] - nu * diff.v[i] +
                       2.0 * mid.v_theta.at(j, k) / g.r(j) * Jm.v[i];
        }
    return res;
}

/// Residual of d_t V + b.grad V + (3 v^r / 2r) V
///             = nu (Delta + (1/r) d_r - 3/(4 r^2)) V, V = v^theta / sqrt(r).
/// Factoring V = sqrt(r) u with u = v^theta / r turns the transport operator
/// into the smooth-even-field identity
///   sqrt(r) [ d_t u + b.grad u + 2 (v^r/r) u - nu (Delta + (2/r) d_r) u ],
/// which is the same equation evaluated on stencils that stay second order
/// at the axis.
inline ScalarField residual_V_equation(const FlowState& prev, const FlowState& next,
                                       double nu) {
    const Grid& g = prev.grid();
    const double dt = next.time - prev.time;
    FlowState mid = detail::midpoint_state(prev, next);

    ScalarField up = detail::over_r(prev.v_theta, AxisParity::even);
    ScalarField un = detail::over_r(next.v_theta, AxisParity::even);
    ScalarField um = detail::over_r(mid.v_theta, AxisParity::even);

    ScalarField adv = advect(mid.v_r, mid.v_z, um, AdvectionScheme::centered2);
    ScalarField diff = laplacian_plus_2r_op(um);

    ScalarField res(g, AxisParity::even, OuterBc::neumann_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j) {
            const std::size_t i = g.idx(j, k);
            const double ru = (un.v[i] - up.v[i]) / dt + adv.v[i] +
                              2.0 * mid.v_r.at(j, k) / g.r(j) * um.v[i] -
                              nu * diff.v[i];
            res.v[i] = std::sqrt(g.r(j)) * ru;
        }
    return res;
}

} // namespace axicrit
