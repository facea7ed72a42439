#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axicrit/config.hpp"
#include "axicrit/diagnostics.hpp"
#include "axicrit/initial_conditions.hpp"
#include "axicrit/solver.hpp"

namespace axicrit {

struct RunSinks {
    std::function<void(const DiagnosticsRow&)> on_row;
    std::function<void(const FlowState&, const InitialData&, const RunningDiag&, int)>
        on_snapshot; // last argument: snapshot index
};

struct RunResult {
    std::vector<DiagnosticsRow> rows;
    bool blew_up = false;
    double blowup_time = 0.0;
    int blowup_stage = 0;
    std::string blowup_field;
    double worst_step_margin = 0.0; // min over steps of ||G_0||inf - ||G(t)||inf
    long steps = 0;
    InitialData init;
    RunningDiag running;
    std::shared_ptr<FlowState> final_state;
};

/// Integrate to t_end, sampling diagnostics every sample_interval (always at
/// t = 0 or the resume time, and at t_end). Deterministic for a given config:
/// dt is clipped so samples land exactly on the sample lattice, which also
/// makes snapshot resume reproduce the continuation run bit for bit.
inline RunResult run_simulation(const RunConfig& cfg, const RunSinks& sinks = {},
                                const FlowState* resume_state = nullptr,
                                const InitialData* resume_init = nullptr,
                                const RunningDiag* resume_running = nullptr) {
    Grid grid = build_grid(cfg.nr, cfg.nz, cfg.r_max, cfg.z_len);
    StreamSolver elliptic(grid);

    Forcing forcing;
    if (cfg.ic_kind == IcKind::manufactured) {
        auto mms = std::make_shared<ManufacturedSolution>(manufactured_for(cfg));
        forcing.gamma = [mms](double r, double z, double t) {
            return mms->force_gamma(r, z, t);
        };
        forcing.omega_theta = [mms](double r, double z, double t) {
            return mms->force_omega(r, z, t);
        };
    }
    TimeStepper stepper(elliptic,
                        {.nu = cfg.nu, .cfl_safety = cfg.cfl_safety, .scheme = cfg.scheme},
                        forcing);

    RunResult res;
    auto state = std::make_shared<FlowState>(grid);
    if (resume_state != nullptr) {
        require_same_grid(grid, resume_state->gamma, "run resume");
        *state = *resume_state;
        res.init = *resume_init;
        res.running = *resume_running;
    } else {
        *state = make_initial_condition(cfg, grid, elliptic);
        res.init = compute_initial_data(*state, cfg.r0);
        res.running.grad_sq_last = gradient_sq_total(*state);
        res.running.gamma_linf_sup = res.init.gamma0_linf;
        res.running.gamma_linf_small_r_sup = linf_norm_small_r(state->gamma, cfg.r0);
        res.running.last_sample_time = 0.0;
    }
    res.worst_step_margin = res.init.gamma0_linf - linf_norm(state->gamma);

    const double interval = cfg.sample_interval;
    const int snap_every =
        cfg.snapshot_interval > 0.0
            ? static_cast<int>(std::llround(cfg.snapshot_interval / interval))
            : 0;

    auto emit_row = [&](const FlowState& s) {
        DiagnosticsRow row = compute_row(s, res.init, res.running, cfg.nu, cfg.delta0);
        res.rows.push_back(row);
        if (sinks.on_row) sinks.on_row(row);
    };

    long sample_index = static_cast<long>(std::llround(state->time / interval));
    emit_row(*state);

    const double t_eps = 1e-12 * std::max(1.0, cfg.t_end);
    while (state->time < cfg.t_end - t_eps) {
        const double next_sample = interval * static_cast<double>(sample_index + 1);
        const double next_event = std::min(next_sample, cfg.t_end);
        double dt = cfg.dt_override ? *cfg.dt_override : stepper.cfl_dt(*state);
        dt = std::min(dt, next_event - state->time);

        try {
            stepper.step(*state, dt);
        } catch (const BlowupError& e) {
            res.blew_up = true;
            res.blowup_time = e.time;
            res.blowup_stage = e.stage;
            res.blowup_field = e.field;
            break;
        }
        ++res.steps;

        // step-resolution ledger: dissipation trapezoid and sup norms
        const double grad_now = gradient_sq_total(*state);
        res.running.dissipation_cum +=
            cfg.nu * dt * (res.running.grad_sq_last + grad_now);
        res.running.grad_sq_last = grad_now;
        const double sup_now = linf_norm(state->gamma);
        res.running.gamma_linf_sup = std::max(res.running.gamma_linf_sup, sup_now);
        res.running.gamma_linf_small_r_sup =
            std::max(res.running.gamma_linf_small_r_sup,
                     linf_norm_small_r(state->gamma, cfg.r0));
        res.worst_step_margin =
            std::min(res.worst_step_margin, res.init.gamma0_linf - sup_now);

        if (std::fabs(state->time - next_sample) <= t_eps) {
            ++sample_index;
            emit_row(*state);
            if (snap_every > 0 && sample_index % snap_every == 0 && sinks.on_snapshot)
                sinks.on_snapshot(*state, res.init, res.running,
                                  static_cast<int>(sample_index / snap_every));
        } else if (std::fabs(state->time - cfg.t_end) <= t_eps) {
            emit_row(*state);
        }
    }

    res.final_state = std::move(state);
    return res;
}

} // namespace axicrit
