// Command-line front end: `run` integrates a configured case and writes the
// diagnostics series plus snapshots, `check` validates a config, and the
// `ineq` subcommands drive the inequality lab. Numerical blow-up is a
// reportable outcome with its own exit code and preserved partial output.
//
// Exit codes: 0 success, 1 configuration/usage error, 2 internal error,
// 3 numerical blow-up.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "axicrit/axicrit.hpp"

namespace fs = std::filesystem;
using namespace axicrit;

namespace {

int cmd_check(const std::string& config_path) {
    RunConfig cfg = load_config(config_path);
    std::fputs(resolved_config_text(cfg).c_str(), stdout);
    return 0;
}

void write_scale_report(const fs::path& dir, const RunResult& res, const RunConfig& cfg) {
    ScaleInvariantReport rep = scale_invariants(
        res.init, res.running.gamma_linf_small_r_sup, cfg.r0, cfg.delta_small);
    nlohmann::json j;
    j["M0"] = rep.M0;
    j["M1"] = rep.M1;
    j["r0"] = rep.r0;
    j["delta"] = rep.delta;
    j["gamma0_linf"] = rep.gamma0_linf;
    j["gamma_linf_small_r_sup"] = rep.gamma_linf_small_r;
    j["margins_defined"] = rep.margins_defined;
    if (rep.margins_defined) {
        j["margin0"] = rep.margin0;
        j["margin1"] = rep.margin1;
    }
    std::ofstream out(dir / "scale_invariants.json");
    out << j.dump(2) << "\n";
}

void write_fbc_report(const fs::path& dir, const ScalarField& v_theta,
                      const RunConfig& cfg) {
    auto family = make_fbc_family(cfg.r_max, cfg.z_len, cfg.nr, cfg.delta0,
                                  cfg.fbc_family_size, cfg.seed);
    FbcReport rep = fbc_report(v_theta, family, cfg.r0, cfg.c0_grid);
    std::ofstream out(dir / "fbc_report.csv");
    out << "c0,cstar_est,cstar_argmax,deltastar_est,deltastar_argmax\n";
    char buf[64];
    for (std::size_t i = 0; i < rep.c0_grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", rep.c0_grid[i]);
        out << buf << ",";
        std::snprintf(buf, sizeof buf, "%.17g", rep.cstar_est[i]);
        out << buf << "," << rep.cstar_argmax[i] << ",";
        std::snprintf(buf, sizeof buf, "%.17g", rep.deltastar_est[i]);
        out << buf << "," << rep.deltastar_argmax[i] << "\n";
    }
    out << "# r0 = " << rep.r0 << ", family: " << rep.family_desc << "\n";
}

int cmd_run(const std::string& config_path, const std::string& resume_path) {
    RunConfig cfg = load_config(config_path);
    fs::create_directories(cfg.directory);
    const fs::path dir(cfg.directory);

    DiagnosticsCsvWriter csv((dir / "diagnostics.csv").string());
    RunSinks sinks;
    sinks.on_row = [&csv](const DiagnosticsRow& row) { csv.write(row); };
    sinks.on_snapshot = [&dir](const FlowState& s, const InitialData& init,
                               const RunningDiag& running, int index) {
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_%05d.bin", index);
        save_snapshot((dir / name).string(), s, init, running);
    };

    RunResult res;
    if (!resume_path.empty()) {
        Grid grid = build_grid(cfg.nr, cfg.nz, cfg.r_max, cfg.z_len);
        LoadedSnapshot snap = load_snapshot(resume_path, grid);
        res = run_simulation(cfg, sinks, &snap.state, &snap.init, &snap.running);
    } else {
        // FBC hypotheses concern the initial swirl; report them up front.
        Grid grid = build_grid(cfg.nr, cfg.nz, cfg.r_max, cfg.z_len);
        StreamSolver elliptic(grid);
        FlowState s0 = make_initial_condition(cfg, grid, elliptic);
        write_fbc_report(dir, s0.v_theta, cfg);
        res = run_simulation(cfg, sinks);
    }

    write_scale_report(dir, res, cfg);

    nlohmann::json summary;
    summary["status"] = res.blew_up ? "blow_up" : "ok";
    summary["steps"] = res.steps;
    summary["rows"] = res.rows.size();
    summary["final_time"] = res.final_state->time;
    summary["worst_step_margin"] = res.worst_step_margin;
    if (res.blew_up) {
        summary["blowup_time"] = res.blowup_time;
        summary["blowup_stage"] = res.blowup_stage;
        summary["blowup_field"] = res.blowup_field;
    }
    {
        std::ofstream out(dir / "run_summary.json");
        out << summary.dump(2) << "\n";
    }

    if (res.blew_up) {
        std::fprintf(stderr,
                     "axicrit: numerical blow-up in field '%s' at t = %.6g (stage %d); "
                     "partial diagnostics preserved in %s\n",
                     res.blowup_field.c_str(), res.blowup_time, res.blowup_stage,
                     cfg.directory.c_str());
        return 3;
    }
    std::printf("run complete: t = %.6g, %ld steps, %zu diagnostic rows -> %s\n",
                res.final_state->time, res.steps, res.rows.size(),
                cfg.directory.c_str());
    return 0;
}

int cmd_ineq_hardy(const std::string& config_path) {
    RunConfig cfg = load_config(config_path);
    LabMesh mesh = make_lab_mesh(cfg.lab_points, cfg.lab_r_min, 1.0);
    std::printf("kind,delta,quantity,value,iterations,converged\n");
    for (double d : cfg.hardy_deltas) {
        HardyEigenReport rep = hardy_best_constant(mesh, d);
        std::printf("eigen,%.17g,lambda_min,%.17g,%d,%d\n", d, rep.lambda_min,
                    rep.iterations, rep.converged ? 1 : 0);
        RadialProfile phi = cutoff_profile(mesh, d);
        HardyRatio hr = hardy_log_ratio(phi);
        std::printf("profile,%.17g,cutoff_ratio,%.17g,0,1\n", d, hr.ratio);
        RadialProfile rphi = RadialProfile::from(
            mesh, 2.0 * d,
            [d](double r) { return r * plateau(r, d, 2 * d); },
            [d](double r) { return plateau(r, d, 2 * d) + r * plateau_deriv(r, d, 2 * d); });
        HardyRatio hr2 = hardy_log_ratio(rphi);
        std::printf("profile,%.17g,r_cutoff_ratio,%.17g,0,1\n", d, hr2.ratio);
    }
    return 0;
}

int cmd_ineq_chain(const std::string& config_path) {
    RunConfig cfg = load_config(config_path);
    LabMesh mesh = make_lab_mesh(cfg.lab_points, cfg.lab_r_min, 1.0);
    RadialProfile gamma = log_critical_gamma(mesh, cfg.ineq_c1, cfg.delta0);
    ChainReport rep = corollary_chain(mesh, gamma, cfg.ineq_c1, cfg.delta0,
                                      cfg.chain_delta, cfg.ineq_delta_star);
    std::printf("test,A1,A2,B,D,c21,c22,holds\n");
    for (const auto& t : rep.per_test)
        std::printf("%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", t.name.c_str(), t.A1,
                    t.A2, t.B, t.D, t.c21, t.c22, (t.holds21 && t.holds22) ? 1 : 0);
    std::printf("# all_hold = %d, c21_max = %.17g, c22_max = %.17g\n", rep.all_hold,
                rep.c21_max, rep.c22_max);
    std::printf("# delta_threshold_closed_form = %.17g\n",
                rep.delta_threshold_closed_form);
    std::printf("# delta_threshold_bisection  = %.17g\n", rep.delta_threshold_bisection);
    std::printf("# leading_coeff(delta) = %.17g, leading_coeff(delta/2) = %.17g\n",
                rep.leading_coeff_delta, rep.leading_coeff_half_delta);
    return 0;
}

int cmd_ineq_k0(const std::string& config_path) {
    RunConfig cfg = load_config(config_path);
    K0Report rep =
        estimate_k0(cfg.nr, cfg.nz, cfg.r_max, cfg.z_len, cfg.k0_seed, cfg.k0_count);
    std::printf("grid,applicable,max_R1,median_R1,max_R2,median_R2\n");
    std::printf("%dx%d,%d,%.17g,%.17g,%.17g,%.17g\n", rep.coarse.nr, rep.coarse.nz,
                rep.coarse.applicable, rep.coarse.max_R1, rep.coarse.median_R1,
                rep.coarse.max_R2, rep.coarse.median_R2);
    std::printf("%dx%d,%d,%.17g,%.17g,%.17g,%.17g\n", rep.fine.nr, rep.fine.nz,
                rep.fine.applicable, rep.fine.max_R1, rep.fine.median_R1, rep.fine.max_R2,
                rep.fine.median_R2);
    std::printf("# drift_R1 = %.17g, drift_R2 = %.17g\n", rep.drift_R1, rep.drift_R2);
    std::printf("# single_mode_R1 = %.17g, oracle = %.17g, rel_err = %.17g\n",
                rep.single_mode_R1, rep.single_mode_R1_oracle, rep.single_mode_rel_err);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric Navier-Stokes swirl lab"};
    app.require_subcommand(1);

    std::string config_path, resume_path;

    CLI::App* run = app.add_subcommand("run", "integrate a configured case");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--resume", resume_path, "snapshot file to resume from");

    CLI::App* check = app.add_subcommand("check", "validate a config and echo defaults");
    check->add_option("config", config_path, "config file")->required();

    CLI::App* ineq = app.add_subcommand("ineq", "inequality lab reports");
    ineq->require_subcommand(1);
    CLI::App* hardy = ineq->add_subcommand("hardy", "log-Hardy constants");
    hardy->add_option("config", config_path, "config file")->required();
    CLI::App* chain = ineq->add_subcommand("chain", "corollary chain report");
    chain->add_option("config", config_path, "config file")->required();
    CLI::App* k0 = ineq->add_subcommand("k0", "empirical gradient-estimate constant");
    k0->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*run) return cmd_run(config_path, resume_path);
        if (*check) return cmd_check(config_path);
        if (*hardy) return cmd_ineq_hardy(config_path);
        if (*chain) return cmd_ineq_chain(config_path);
        if (*k0) return cmd_ineq_k0(config_path);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "axicrit: %s\n", e.what());
        return 1;
    } catch (const SnapshotError& e) {
        std::fprintf(stderr, "axicrit: %s\n", e.what());
        return 1;
    } catch (const BlowupError& e) {
        std::fprintf(stderr, "axicrit: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "axicrit: internal error: %s\n", e.what());
        return 2;
    }
    return 1;
}
