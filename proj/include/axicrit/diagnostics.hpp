#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "axicrit/diffops.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/field.hpp"
#include "axicrit/solver.hpp"
#include "axicrit/state.hpp"

namespace axicrit {

// ---------------------------------------------------------------------------
// Initial-data norms and the derived a-priori bounds. Frozen at t = 0 and
// carried through snapshots so a resumed run reproduces the same margins.

struct InitialData {
    double energy0 = 0.0;
    double gamma0_linf = 0.0;
    double gamma0_l2 = 0.0;
    double gamma0_l3 = 0.0;
    double v0_l2 = 0.0;
    double r_omega_r0_sq = 0.0;
    double r_omega_z0_sq = 0.0;
    double r2_omega_theta0_sq = 0.0;
    double M0 = 0.0;
    double M1 = 0.0;
    double vort1_rhs = 0.0;       // ||r w^r_0||^2 + ||r w^z_0||^2 + 4(||G_0||_inf^2 + 1)||v_0||^2
    double vort2_bracket = 0.0;   // ||r^2 w^th_0||^2 + (||v_0||^4 + ||G_0||_L3^2)||v_0||^2
    double vort2_timescale = 0.0; // ||G_0||_L3^2 + ||v_0||^4
};

// Running accumulators maintained by the run loop (per step for the energy
// ledger and sup norms, per sample for the vorticity-gradient integrals).
struct RunningDiag {
    double dissipation_cum = 0.0; // 2 nu int_0^t ||grad v||^2
    double grad_sq_last = 0.0;    // trapezoid partner at the previous step
    double gamma_linf_sup = 0.0;
    double gamma_linf_small_r_sup = 0.0;
    double vort1_sup = 0.0;      // sup_t (||r w^r||^2 + ||r w^z||^2)
    double vort1_grad_cum = 0.0; // int (||grad(r w^r)||^2 + ||grad(r w^z)||^2)
    double vort1_grad_last = 0.0;
    double vort2_sup = 0.0; // sup_t ||r^2 w^theta||^2
    double vort2_grad_cum = 0.0;
    double vort2_grad_last = 0.0;
    double last_sample_time = 0.0;
};

// ---------------------------------------------------------------------------

/// Weighted vorticity quantities of the decay lemma. r w^r = -d_z Gamma and
/// r w^z = d_r Gamma hold exactly for the discrete curl, so everything is
/// computed from Gamma and omega^theta directly.
struct WeightedVorticity {
    double r_omega_r_l2 = 0.0;
    double r2_omega_theta_l2 = 0.0;
    double r_omega_z_l2 = 0.0;
    double grad_r_omega_r_sq = 0.0;
    double grad_r_omega_z_sq = 0.0;
    double grad_r2_omega_theta_sq = 0.0;
};

inline double grad_sq_integral(const ScalarField& f) {
    ScalarField fr = d_r(f);
    ScalarField fz = d_z(f);
    const Grid& g = *f.grid;
    double acc = 0.0;
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            acc += (fr.at(j, k) * fr.at(j, k) + fz.at(j, k) * fz.at(j, k)) * g.r(j);
    return acc * g.dr * g.dz;
}

inline WeightedVorticity weighted_vorticity_norms(const FlowState& s) {
    const Grid& g = s.grid();
    WeightedVorticity out;

    ScalarField rwr = d_z(s.gamma);
    for (double& x : rwr.v) x = -x;
    rwr.parity = AxisParity::even;

    ScalarField rwz = d_r(s.gamma); // parity flips to odd automatically
    ScalarField r2wt(g, AxisParity::odd, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            r2wt.at(j, k) = g.r(j) * g.r(j) * s.omega_theta.at(j, k);

    out.r_omega_r_l2 = weighted_l2_norm(rwr);
    out.r_omega_z_l2 = weighted_l2_norm(rwz);
    out.r2_omega_theta_l2 = weighted_l2_norm(r2wt);
    out.grad_r_omega_r_sq = grad_sq_integral(rwr);
    out.grad_r_omega_z_sq = grad_sq_integral(rwz);
    out.grad_r2_omega_theta_sq = grad_sq_integral(r2wt);
    return out;
}

/// ||J||, ||Omega||, their gradient norms and axis traces.
struct JOmegaEnergy {
    double J_l2 = 0.0;
    double Omega_l2 = 0.0;
    double gradJ_l2 = 0.0;
    double gradOmega_l2 = 0.0;
    double J_axis_trace_sq = 0.0;
    double Omega_axis_trace_sq = 0.0;
};

inline JOmegaEnergy jomega_energy(const FlowState& s) {
    DerivedFields d = derived_fields_of(s.v_theta, s.omega_theta);
    JOmegaEnergy out;
    out.J_l2 = weighted_l2_norm(d.J);
    out.Omega_l2 = weighted_l2_norm(d.Omega);
    out.gradJ_l2 = std::sqrt(grad_sq_integral(d.J));
    out.gradOmega_l2 = std::sqrt(grad_sq_integral(d.Omega));
    out.J_axis_trace_sq = axis_trace_sq_integral(d.J);
    out.Omega_axis_trace_sq = axis_trace_sq_integral(d.Omega);
    return out;
}

/// |V|^2 = (v^theta)^2 / r quantities and the L4 norm of v^theta.
struct VQuartic {
    double Vsq_l2 = 0.0;
    double gradVsq_l2 = 0.0;
    double rinvVsq_l2 = 0.0;
    double vtheta_l4 = 0.0;
};

inline VQuartic v_quartic(const FlowState& s) {
    const Grid& g = s.grid();
    ScalarField vsq(g, AxisParity::odd, OuterBc::dirichlet_zero);
    ScalarField rinv(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j) {
            const double vt = s.v_theta.at(j, k);
            vsq.at(j, k) = vt * vt / g.r(j);
            rinv.at(j, k) = vt * vt / (g.r(j) * g.r(j));
        }
    VQuartic out;
    out.Vsq_l2 = weighted_l2_norm(vsq);
    out.gradVsq_l2 = std::sqrt(grad_sq_integral(vsq));
    out.rinvVsq_l2 = weighted_l2_norm(rinv);
    out.vtheta_l4 = weighted_lp_norm(s.v_theta, 4.0);
    return out;
}

/// Smallest C1 such that |Gamma| <= C1 |ln r|^{-2} holds on r <= delta0 at
/// this time: the sup of |Gamma| ln^2 r over the probed cells.
inline double log_criticality(const ScalarField& gamma, double delta0) {
    if (!(delta0 > 0.0 && delta0 < 0.5))
        throw ConfigError("log_criticality: delta0 must lie in (0, 1/2)");
    const Grid& g = *gamma.grid;
    double sup = 0.0;
    for (int j = 0; j < g.nr && g.r(j) <= delta0; ++j) {
        const double lg = std::log(g.r(j));
        for (int k = 0; k < g.nz; ++k)
            sup = std::max(sup, std::fabs(gamma.at(j, k)) * lg * lg);
    }
    return sup;
}

/// Ratios bounded by the absolute constant of the v^r/r gradient estimates:
/// R1 = ||grad(v^r/r)|| / ||Omega||, R2 = ||grad^2(v^r/r)|| / ||d_z Omega||.
struct Lemma1Ratios {
    bool applicable = false;
    double R1 = 0.0;
    double R2 = 0.0;
    double grad_vr_over_r = 0.0;
    double hess_vr_over_r = 0.0;
};

inline Lemma1Ratios lemma1_ratios(const FlowState& s) {
    const Grid& g = s.grid();
    ScalarField vror(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            vror.at(j, k) = s.v_r.at(j, k) / g.r(j);
    ScalarField Omega(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            Omega.at(j, k) = s.omega_theta.at(j, k) / g.r(j);

    Lemma1Ratios out;
    const double omega_l2 = weighted_l2_norm(Omega);
    if (omega_l2 == 0.0) return out;
    const double dz_omega_l2 = weighted_l2_norm(d_z(Omega));
    out.grad_vr_over_r = std::sqrt(grad_sq_integral(vror));
    out.hess_vr_over_r = std::sqrt(quadrature(g, hessian_sq_density(vror)));
    out.applicable = true;
    out.R1 = out.grad_vr_over_r / omega_l2;
    out.R2 = dz_omega_l2 > 0.0 ? out.hess_vr_over_r / dz_omega_l2 : 0.0;
    return out;
}

/// ||v^r/r||_inf against the interpolation bound sqrt(||grad f|| ||grad^2 f||).
struct VrOverRInterp {
    bool applicable = false;
    double linf = 0.0;
    double bound = 0.0; // sqrt(||grad f|| * ||grad^2 f||)
    double ratio = 0.0; // linf^2 / (||grad f|| ||grad^2 f||)
};

inline VrOverRInterp vr_over_r_interp_check(const FlowState& s) {
    const Grid& g = s.grid();
    ScalarField vror(g, AxisParity::even, OuterBc::dirichlet_zero);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            vror.at(j, k) = s.v_r.at(j, k) / g.r(j);

    VrOverRInterp out;
    out.linf = linf_norm(vror);
    const double grad = std::sqrt(grad_sq_integral(vror));
    const double hess = std::sqrt(quadrature(g, hessian_sq_density(vror)));
    if (grad == 0.0 || hess == 0.0) return out;
    out.applicable = true;
    out.bound = std::sqrt(grad * hess);
    out.ratio = out.linf * out.linf / (grad * hess);
    return out;
}

/// Magnitude of the energy flux through the outer wall: the viscous working
/// of the Dirichlet fields plus the advective flux carried by the residual
/// v^r at the outermost cells. Compact data keeps this at truncation level;
/// it is reported, never assumed zero.
inline double boundary_leakage(const FlowState& s, double nu) {
    const Grid& g = s.grid();
    const int j = g.nr - 1;
    double viscous = 0.0, advective = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        for (const ScalarField* c : {&s.v_r, &s.v_theta, &s.v_z}) {
            const double cb = c->at(j, k);
            viscous += cb * (c->gval(g.nr, k) - cb) / g.dr;
        }
        const double vsq = s.v_r.at(j, k) * s.v_r.at(j, k) +
                           s.v_theta.at(j, k) * s.v_theta.at(j, k) +
                           s.v_z.at(j, k) * s.v_z.at(j, k);
        advective += 0.5 * vsq * s.v_r.at(j, k);
    }
    return std::fabs(nu * viscous * g.r_max * g.dz) +
           std::fabs(advective * g.r_max * g.dz);
}

inline InitialData compute_initial_data(const FlowState& s0, double r0) {
    InitialData d;
    d.energy0 = kinetic_energy(s0);
    d.gamma0_linf = linf_norm(s0.gamma);
    d.gamma0_l2 = weighted_l2_norm(s0.gamma);
    d.gamma0_l3 = weighted_lp_norm(s0.gamma, 3.0);
    d.v0_l2 = std::sqrt(d.energy0);

    WeightedVorticity wv = weighted_vorticity_norms(s0);
    d.r_omega_r0_sq = wv.r_omega_r_l2 * wv.r_omega_r_l2;
    d.r_omega_z0_sq = wv.r_omega_z_l2 * wv.r_omega_z_l2;
    d.r2_omega_theta0_sq = wv.r2_omega_theta_l2 * wv.r2_omega_theta_l2;

    JOmegaEnergy je = jomega_energy(s0);
    VQuartic vq = v_quartic(s0);
    d.M0 = (je.Omega_l2 + vq.Vsq_l2) * d.gamma0_l2;
    d.M1 = (vq.Vsq_l2 + je.Omega_l2 +
            std::pow(r0, -2.0) * d.v0_l2 * std::pow(d.gamma0_linf, 1.5)) *
           d.gamma0_l2;

    d.vort1_rhs = d.r_omega_r0_sq + d.r_omega_z0_sq +
                  4.0 * (d.gamma0_linf * d.gamma0_linf + 1.0) * d.energy0;
    d.vort2_timescale = d.gamma0_l3 * d.gamma0_l3 + d.energy0 * d.energy0;
    d.vort2_bracket = d.r2_omega_theta0_sq +
                      (d.energy0 * d.energy0 + d.gamma0_l3 * d.gamma0_l3) * d.energy0;
    return d;
}

// ---------------------------------------------------------------------------
// The per-sample record. Column names are the CSV schema; not-applicable
// ratio entries are written as 0.

struct DiagnosticsRow {
    double time = 0.0;
    double energy = 0.0;
    double dissipation_cum = 0.0;
    double energy_identity_residual = 0.0;
    double gamma_linf = 0.0;
    double gamma_l2 = 0.0;
    double gamma_l3 = 0.0;
    double max_principle_margin = 0.0;
    double log_criticality_C = 0.0;
    double J_l2 = 0.0;
    double Omega_l2 = 0.0;
    double gradJ_l2 = 0.0;
    double gradOmega_l2 = 0.0;
    double J_axis_trace_sq = 0.0;
    double Omega_axis_trace_sq = 0.0;
    double Vsq_l2 = 0.0;
    double gradVsq_l2 = 0.0;
    double rinvVsq_l2 = 0.0;
    double vtheta_l4 = 0.0;
    double r_omega_r_l2 = 0.0;
    double r2_omega_theta_l2 = 0.0;
    double r_omega_z_l2 = 0.0;
    double vorticity1_lhs = 0.0;
    double vorticity1_rhs = 0.0;
    double vorticity1_margin = 0.0;
    double vorticity2_lhs = 0.0;
    double vorticity2_ratio = 0.0;
    double lemma1_R1 = 0.0;
    double lemma1_R2 = 0.0;
    double vr_over_r_linf = 0.0;
    double vr_over_r_interp_bound = 0.0;
    double vr_over_r_interp_ratio = 0.0;
    double boundary_leakage = 0.0;

    static constexpr int n_columns = 33;

    static const std::array<const char*, n_columns>& column_names() {
        static const std::array<const char*, n_columns> names = {
            "time", "energy", "dissipation_cum", "energy_identity_residual",
            "gamma_linf", "gamma_l2", "gamma_l3", "max_principle_margin",
            "log_criticality_C", "J_l2", "Omega_l2", "gradJ_l2", "gradOmega_l2",
            "J_axis_trace_sq", "Omega_axis_trace_sq", "Vsq_l2", "gradVsq_l2",
            "rinvVsq_l2", "vtheta_l4", "r_omega_r_l2", "r2_omega_theta_l2",
            "r_omega_z_l2", "vorticity1_lhs", "vorticity1_rhs", "vorticity1_margin",
            "vorticity2_lhs", "vorticity2_ratio", "lemma1_R1", "lemma1_R2",
            "vr_over_r_linf", "vr_over_r_interp_bound", "vr_over_r_interp_ratio",
            "boundary_leakage"};
        return names;
    }

    std::array<double, n_columns> values() const {
        return {time, energy, dissipation_cum, energy_identity_residual,
                gamma_linf, gamma_l2, gamma_l3, max_principle_margin,
                log_criticality_C, J_l2, Omega_l2, gradJ_l2, gradOmega_l2,
                J_axis_trace_sq, Omega_axis_trace_sq, Vsq_l2, gradVsq_l2,
                rinvVsq_l2, vtheta_l4, r_omega_r_l2, r2_omega_theta_l2,
                r_omega_z_l2, vorticity1_lhs, vorticity1_rhs, vorticity1_margin,
                vorticity2_lhs, vorticity2_ratio, lemma1_R1, lemma1_R2,
                vr_over_r_linf, vr_over_r_interp_bound, vr_over_r_interp_ratio,
                boundary_leakage};
    }

    bool all_finite() const {
        for (double x : values())
            if (!std::isfinite(x)) return false;
        return true;
    }
};

/// Assemble the full record for one sampled time. `running` must already be
/// advanced to this time (dissipation ledger, sup norms); the per-sample
/// vorticity-gradient integrals are updated here.
inline DiagnosticsRow compute_row(const FlowState& s, const InitialData& init,
                                  RunningDiag& running, double nu, double delta0) {
    DiagnosticsRow row;
    row.time = s.time;
    row.energy = kinetic_energy(s);
    row.dissipation_cum = running.dissipation_cum;
    row.energy_identity_residual = row.energy + running.dissipation_cum - init.energy0;
    row.gamma_linf = linf_norm(s.gamma);
    row.gamma_l2 = weighted_l2_norm(s.gamma);
    row.gamma_l3 = weighted_lp_norm(s.gamma, 3.0);
    row.max_principle_margin = init.gamma0_linf - row.gamma_linf;
    row.log_criticality_C = log_criticality(s.gamma, delta0);

    JOmegaEnergy je = jomega_energy(s);
    row.J_l2 = je.J_l2;
    row.Omega_l2 = je.Omega_l2;
    row.gradJ_l2 = je.gradJ_l2;
    row.gradOmega_l2 = je.gradOmega_l2;
    row.J_axis_trace_sq = je.J_axis_trace_sq;
    row.Omega_axis_trace_sq = je.Omega_axis_trace_sq;

    VQuartic vq = v_quartic(s);
    row.Vsq_l2 = vq.Vsq_l2;
    row.gradVsq_l2 = vq.gradVsq_l2;
    row.rinvVsq_l2 = vq.rinvVsq_l2;
    row.vtheta_l4 = vq.vtheta_l4;

    WeightedVorticity wv = weighted_vorticity_norms(s);
    row.r_omega_r_l2 = wv.r_omega_r_l2;
    row.r2_omega_theta_l2 = wv.r2_omega_theta_l2;
    row.r_omega_z_l2 = wv.r_omega_z_l2;

    // advance the sample-resolution pieces of the decay-lemma ledger
    const double dt_sample = s.time - running.last_sample_time;
    const double v1_grad = wv.grad_r_omega_r_sq + wv.grad_r_omega_z_sq;
    const double v2_grad = wv.grad_r2_omega_theta_sq;
    if (dt_sample > 0.0) {
        running.vort1_grad_cum += 0.5 * dt_sample * (running.vort1_grad_last + v1_grad);
        running.vort2_grad_cum += 0.5 * dt_sample * (running.vort2_grad_last + v2_grad);
    }
    running.vort1_grad_last = v1_grad;
    running.vort2_grad_last = v2_grad;
    running.last_sample_time = s.time;

    const double v1_now = wv.r_omega_r_l2 * wv.r_omega_r_l2 +
                          wv.r_omega_z_l2 * wv.r_omega_z_l2;
    running.vort1_sup = std::max(running.vort1_sup, v1_now);
    running.vort2_sup =
        std::max(running.vort2_sup, wv.r2_omega_theta_l2 * wv.r2_omega_theta_l2);

    row.vorticity1_lhs = running.vort1_sup + running.vort1_grad_cum;
    row.vorticity1_rhs = init.vort1_rhs;
    row.vorticity1_margin = row.vorticity1_rhs - row.vorticity1_lhs;
    row.vorticity2_lhs = running.vort2_sup + running.vort2_grad_cum;
    const double vort2_envelope =
        init.vort2_bracket *
        (init.vort2_timescale > 0.0 ? std::exp(s.time / init.vort2_timescale) : 1.0);
    row.vorticity2_ratio = vort2_envelope > 0.0 ? row.vorticity2_lhs / vort2_envelope : 0.0;

    Lemma1Ratios l1 = lemma1_ratios(s);
    row.lemma1_R1 = l1.applicable ? l1.R1 : 0.0;
    row.lemma1_R2 = l1.applicable ? l1.R2 : 0.0;

    VrOverRInterp vi = vr_over_r_interp_check(s);
    row.vr_over_r_linf = vi.linf;
    row.vr_over_r_interp_bound = vi.applicable ? vi.bound : 0.0;
    row.vr_over_r_interp_ratio = vi.applicable ? vi.ratio : 0.0;

    row.boundary_leakage = boundary_leakage(s, nu);
    return row;
}

// ---------------------------------------------------------------------------
// Energy ledger and maximum-principle checks over stored series (the run
// loop maintains the same quantities incrementally at step resolution).

inline std::vector<double> energy_ledger(const std::vector<FlowState>& series, double nu) {
    std::vector<double> residual(series.size(), 0.0);
    if (series.empty()) return residual;
    const double e0 = kinetic_energy(series.front());
    double cum = 0.0;
    double grad_prev = gradient_sq_total(series.front());
    for (std::size_t i = 1; i < series.size(); ++i) {
        const double grad_now = gradient_sq_total(series[i]);
        const double dt = series[i].time - series[i - 1].time;
        cum += nu * dt * (grad_prev + grad_now); // 2 nu * trapezoid
        grad_prev = grad_now;
        residual[i] = kinetic_energy(series[i]) + cum - e0;
    }
    return residual;
}

struct MaxPrincipleCheck {
    std::vector<double> margins;
    bool pass = true;
};

inline MaxPrincipleCheck max_principle_check(const std::vector<double>& gamma_linf_series,
                                             double gamma0_linf) {
    MaxPrincipleCheck out;
    out.margins.reserve(gamma_linf_series.size());
    for (double sup : gamma_linf_series) {
        out.margins.push_back(gamma0_linf - sup);
        if (sup > gamma0_linf * (1.0 + 1e-12) + 0.0) out.pass = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Form Boundedness Condition estimates over a finite test-function family.

struct FbcTestFunction {
    std::string name;
    std::function<double(double)> rho;  // radial factor
    std::function<double(double)> drho; // its derivative
    std::function<double(double)> zeta; // axial factor (periodic)
};

/// Quintic plateau profile: 1 for x <= lo, 0 for x >= hi, C2 blend between.
inline double plateau(double x, double lo, double hi) {
    if (x <= lo) return 1.0;
    if (x >= hi) return 0.0;
    const double t = (x - lo) / (hi - lo);
    return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

inline double plateau_deriv(double x, double lo, double hi) {
    if (x <= lo || x >= hi) return 0.0;
    const double w = hi - lo;
    const double t = (x - lo) / w;
    return -(30.0 * t * t * (1.0 - t) * (1.0 - t)) / w;
}

/// The standard family: dyadic-scale radial plateaus, the log-critical
/// profile, and seeded random smooth compactly supported members, each
/// paired with a constant or low-mode axial factor.
inline std::vector<FbcTestFunction> make_fbc_family(double r_max, double z_len,
                                                    int nr, double delta0,
                                                    int n_random, unsigned seed) {
    std::vector<FbcTestFunction> fam;
    auto zeta_one = [](double) { return 1.0; };

    int m_max = 1;
    while ((1 << (m_max + 1)) <= nr) ++m_max;
    for (int m = 1; m <= m_max; ++m) {
        const double delta = r_max * std::pow(2.0, -m - 1);
        fam.push_back({"dyadic_m" + std::to_string(m),
                       [delta](double r) { return plateau(r, delta, 2 * delta); },
                       [delta](double r) { return plateau_deriv(r, delta, 2 * delta); },
                       zeta_one});
    }

    // log-critical direction: |ln r|^{-1} cut to compact support at delta0
    fam.push_back({"log_profile",
                   [delta0](double r) {
                       const double cut = plateau(r, delta0, 2 * delta0);
                       if (cut == 0.0 || r <= 0.0) return 0.0;
                       return cut / std::fabs(std::log(r));
                   },
                   [delta0](double r) {
                       if (r <= 0.0 || r >= 2 * delta0) return 0.0;
                       const double lg = std::fabs(std::log(r));
                       const double cut = plateau(r, delta0, 2 * delta0);
                       const double dcut = plateau_deriv(r, delta0, 2 * delta0);
                       return dcut / lg + cut / (lg * lg * r);
                   },
                   zeta_one});

    std::mt19937 gen(seed);
    auto uni = [&gen]() { return (gen() >> 8) * (1.0 / 16777216.0); };
    for (int i = 0; i < n_random; ++i) {
        const double rs = r_max * (0.3 + 0.6 * uni());
        std::array<double, 4> a{};
        for (double& c : a) c = 2.0 * uni() - 1.0;
        fam.push_back({"random_" + std::to_string(i),
                       [rs, a](double r) {
                           if (r >= rs) return 0.0;
                           double acc = 0.0;
                           for (std::size_t q = 0; q < a.size(); ++q)
                               acc += a[q] * std::sin((q + 1) * M_PI * r / rs);
                           return acc;
                       },
                       [rs, a](double r) {
                           if (r >= rs) return 0.0;
                           double acc = 0.0;
                           for (std::size_t q = 0; q < a.size(); ++q)
                               acc += a[q] * (q + 1) * M_PI / rs *
                                      std::cos((q + 1) * M_PI * r / rs);
                           return acc;
                       },
                       zeta_one});
    }

    // a few low z-modes on the widest plateau probe axial structure
    const double dwide = r_max / 4;
    auto rho_wide = [dwide](double r) { return plateau(r, dwide, 2 * dwide); };
    auto drho_wide = [dwide](double r) { return plateau_deriv(r, dwide, 2 * dwide); };
    fam.push_back({"wide_cos1", rho_wide, drho_wide,
                   [z_len](double z) { return std::cos(2 * M_PI * z / z_len); }});
    fam.push_back({"wide_sin2", rho_wide, drho_wide,
                   [z_len](double z) { return std::sin(4 * M_PI * z / z_len); }});
    return fam;
}

struct FbcReport {
    double r0 = 0.0;
    std::vector<double> c0_grid;
    std::vector<double> cstar_est;      // per C0
    std::vector<double> deltastar_est;  // per C0
    std::vector<std::string> cstar_argmax, deltastar_argmax;
    int degenerate_excluded = 0;
    std::string family_desc;
};

/// For each C0, the worst-case Rayleigh quotients
///   C*    = max_f [A1(f) - C0 D(f)]+ / B(f),
///   delta* = max_f [A2(f) - C0 D(f)]+ / B(f)
/// with A1 = int (|v^th|/r) f^2 dx, A2 = int |v^th|^2 f^2 dx,
/// B = int |d_r f|^2 dx, D = int_{r >= r0} f^2 dx. Estimates are suprema over
/// the sampled family, i.e. lower bounds for the true best constants.
inline FbcReport fbc_report(const ScalarField& v_theta,
                            const std::vector<FbcTestFunction>& family, double r0,
                            const std::vector<double>& c0_grid) {
    if (family.empty()) throw ConfigError("fbc_report: empty test-function family");
    const Grid& g = *v_theta.grid;

    struct Ints {
        double A1, A2, B, D;
        std::string name;
    };
    std::vector<Ints> ints;
    int degenerate = 0;
    for (const auto& f : family) {
        double A1 = 0.0, A2 = 0.0, B = 0.0, D = 0.0;
        for (int k = 0; k < g.nz; ++k) {
            const double zf = f.zeta(g.z(k));
            for (int j = 0; j < g.nr; ++j) {
                const double w = g.weight(j);
                const double fv = f.rho(g.r(j)) * zf;
                const double dfv = f.drho(g.r(j)) * zf;
                const double vt = std::fabs(v_theta.at(j, k));
                A1 += vt / g.r(j) * fv * fv * w;
                A2 += vt * vt * fv * fv * w;
                B += dfv * dfv * w;
                if (g.r(j) >= r0) D += fv * fv * w;
            }
        }
        if (B == 0.0) {
            ++degenerate;
            continue;
        }
        ints.push_back({A1, A2, B, D, f.name});
    }
    if (ints.empty())
        throw ConfigError("fbc_report: all test functions radially constant");

    FbcReport rep;
    rep.r0 = r0;
    rep.c0_grid = c0_grid;
    rep.degenerate_excluded = degenerate;
    rep.family_desc = std::to_string(family.size()) + " members (" +
                      std::to_string(degenerate) + " degenerate excluded)";
    for (double c0 : c0_grid) {
        double cs = 0.0, ds = 0.0;
        std::string csn = "-", dsn = "-";
        for (const auto& q : ints) {
            const double v1 = std::max(0.0, q.A1 - c0 * q.D) / q.B;
            const double v2 = std::max(0.0, q.A2 - c0 * q.D) / q.B;
            if (v1 > cs) {
                cs = v1;
                csn = q.name;
            }
            if (v2 > ds) {
                ds = v2;
                dsn = q.name;
            }
        }
        rep.cstar_est.push_back(cs);
        rep.deltastar_est.push_back(ds);
        rep.cstar_argmax.push_back(csn);
        rep.deltastar_argmax.push_back(dsn);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Scale-invariant smallness report.

struct ScaleInvariantReport {
    double M0 = 0.0;
    double M1 = 0.0;
    double r0 = 0.0;
    double delta = 0.0;
    double gamma0_linf = 0.0;
    double gamma_linf_small_r = 0.0; // sup over the run so far, r <= r0
    bool margins_defined = false;
    double margin0 = 0.0; // delta/M0 - ||Gamma_0||_inf
    double margin1 = 0.0; // delta/M1 - sup ||Gamma||_inf(r<=r0)
};

inline ScaleInvariantReport scale_invariants(const InitialData& init,
                                             double gamma_linf_small_r_sup, double r0,
                                             double delta) {
    ScaleInvariantReport rep;
    rep.M0 = init.M0;
    rep.M1 = init.M1;
    rep.r0 = r0;
    rep.delta = delta;
    rep.gamma0_linf = init.gamma0_linf;
    rep.gamma_linf_small_r = gamma_linf_small_r_sup;
    if (init.M0 > 0.0 && init.M1 > 0.0) {
        rep.margins_defined = true;
        rep.margin0 = delta / init.M0 - init.gamma0_linf;
        rep.margin1 = delta / init.M1 - gamma_linf_small_r_sup;
    }
    return rep;
}

} // namespace axicrit
