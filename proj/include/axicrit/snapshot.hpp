#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axicrit/diagnostics.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/state.hpp"

namespace axicrit {

// Snapshot layout: one JSON header line (schema version, grid, time, field
// names, element type, byte order, diagnostics ledger), a newline, then the
// raw little-endian float64 arrays in header order, r index fastest.
// Restoring a snapshot and resuming reproduces the original run's subsequent
// diagnostics bit-identically; the ledger carries everything the running
// margins reference.

inline constexpr int snapshot_schema_version = 1;

namespace detail {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms unsupported");

inline bool is_little_endian() { return std::endian::native == std::endian::little; }

inline nlohmann::json ledger_json(const InitialData& init, const RunningDiag& run) {
    nlohmann::json j;
    j["energy0"] = init.energy0;
    j["gamma0_linf"] = init.gamma0_linf;
    j["gamma0_l2"] = init.gamma0_l2;
    j["gamma0_l3"] = init.gamma0_l3;
    j["v0_l2"] = init.v0_l2;
    j["r_omega_r0_sq"] = init.r_omega_r0_sq;
    j["r_omega_z0_sq"] = init.r_omega_z0_sq;
    j["r2_omega_theta0_sq"] = init.r2_omega_theta0_sq;
    j["M0"] = init.M0;
    j["M1"] = init.M1;
    j["vort1_rhs"] = init.vort1_rhs;
    j["vort2_bracket"] = init.vort2_bracket;
    j["vort2_timescale"] = init.vort2_timescale;
    j["dissipation_cum"] = run.dissipation_cum;
    j["grad_sq_last"] = run.grad_sq_last;
    j["gamma_linf_sup"] = run.gamma_linf_sup;
    j["gamma_linf_small_r_sup"] = run.gamma_linf_small_r_sup;
    j["vort1_sup"] = run.vort1_sup;
    j["vort1_grad_cum"] = run.vort1_grad_cum;
    j["vort1_grad_last"] = run.vort1_grad_last;
    j["vort2_sup"] = run.vort2_sup;
    j["vort2_grad_cum"] = run.vort2_grad_cum;
    j["vort2_grad_last"] = run.vort2_grad_last;
    j["last_sample_time"] = run.last_sample_time;
    return j;
}

inline void ledger_from_json(const nlohmann::json& j, InitialData& init, RunningDiag& run) {
    init.energy0 = j.at("energy0");
    init.gamma0_linf = j.at("gamma0_linf");
    init.gamma0_l2 = j.at("gamma0_l2");
    init.gamma0_l3 = j.at("gamma0_l3");
    init.v0_l2 = j.at("v0_l2");
    init.r_omega_r0_sq = j.at("r_omega_r0_sq");
    init.r_omega_z0_sq = j.at("r_omega_z0_sq");
    init.r2_omega_theta0_sq = j.at("r2_omega_theta0_sq");
    init.M0 = j.at("M0");
    init.M1 = j.at("M1");
    init.vort1_rhs = j.at("vort1_rhs");
    init.vort2_bracket = j.at("vort2_bracket");
    init.vort2_timescale = j.at("vort2_timescale");
    run.dissipation_cum = j.at("dissipation_cum");
    run.grad_sq_last = j.at("grad_sq_last");
    run.gamma_linf_sup = j.at("gamma_linf_sup");
    run.gamma_linf_small_r_sup = j.at("gamma_linf_small_r_sup");
    run.vort1_sup = j.at("vort1_sup");
    run.vort1_grad_cum = j.at("vort1_grad_cum");
    run.vort1_grad_last = j.at("vort1_grad_last");
    run.vort2_sup = j.at("vort2_sup");
    run.vort2_grad_cum = j.at("vort2_grad_cum");
    run.vort2_grad_last = j.at("vort2_grad_last");
    run.last_sample_time = j.at("last_sample_time");
}

} // namespace detail

inline void save_snapshot(const std::string& path, const FlowState& s,
                          const InitialData& init, const RunningDiag& running) {
    if (!detail::is_little_endian())
        throw SnapshotError(SnapshotError::Kind::bad_header,
                            "snapshot: writing requires a little-endian host");
    const Grid& g = s.grid();
    nlohmann::json h;
    h["schema_version"] = snapshot_schema_version;
    h["grid"] = {{"nr", g.nr}, {"nz", g.nz}, {"r_max", g.r_max}, {"z_len", g.z_len}};
    h["time"] = s.time;
    h["fields"] = {"gamma", "omega_theta", "psi_theta"};
    h["element_type"] = "float64";
    h["byte_order"] = "little_endian";
    h["ledger"] = detail::ledger_json(init, running);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("snapshot: cannot open '" + path + "' for writing");
    out << h.dump() << "\n";
    for (const ScalarField* f : {&s.gamma, &s.omega_theta, &s.psi_theta})
        out.write(reinterpret_cast<const char*>(f->v.data()),
                  static_cast<std::streamsize>(f->v.size() * sizeof(double)));
    if (!out) throw ConfigError("snapshot: short write to '" + path + "'");
}

struct LoadedSnapshot {
    FlowState state;
    InitialData init;
    RunningDiag running;
};

/// Load and rebuild a fully consistent state: the stored psi is reused (not
/// re-solved) and the velocity caches are reconstructed with the same
/// stencils the run loop uses, so the resumed trajectory is bit-identical.
inline LoadedSnapshot load_snapshot(const std::string& path, const Grid& grid) {
    if (!detail::is_little_endian())
        throw SnapshotError(SnapshotError::Kind::bad_header,
                            "snapshot: reading requires a little-endian host");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("snapshot: cannot open '" + path + "'");
    std::string header_line;
    if (!std::getline(in, header_line))
        throw SnapshotError(SnapshotError::Kind::bad_header, "snapshot: missing header");

    nlohmann::json h;
    try {
        h = nlohmann::json::parse(header_line);
    } catch (const nlohmann::json::exception& e) {
        throw SnapshotError(SnapshotError::Kind::bad_header,
                            std::string("snapshot: unparseable header: ") + e.what());
    }

    try {
        if (h.at("schema_version").get<int>() != snapshot_schema_version)
            throw SnapshotError(SnapshotError::Kind::version_mismatch,
                                "snapshot: schema version " +
                                    h.at("schema_version").dump() + " unsupported");
        if (h.at("byte_order").get<std::string>() != "little_endian" ||
            h.at("element_type").get<std::string>() != "float64")
            throw SnapshotError(SnapshotError::Kind::version_mismatch,
                                "snapshot: unsupported element encoding");
        const auto& hg = h.at("grid");
        if (hg.at("nr").get<int>() != grid.nr || hg.at("nz").get<int>() != grid.nz ||
            hg.at("r_max").get<double>() != grid.r_max ||
            hg.at("z_len").get<double>() != grid.z_len)
            throw SnapshotError(SnapshotError::Kind::grid_mismatch,
                                "snapshot: grid does not match the configured grid");

        LoadedSnapshot out{FlowState(grid), {}, {}};
        out.state.time = h.at("time").get<double>();
        detail::ledger_from_json(h.at("ledger"), out.init, out.running);

        const auto fields = h.at("fields").get<std::vector<std::string>>();
        for (const auto& name : fields) {
            ScalarField* f = nullptr;
            if (name == "gamma") f = &out.state.gamma;
            else if (name == "omega_theta") f = &out.state.omega_theta;
            else if (name == "psi_theta") f = &out.state.psi_theta;
            else
                throw SnapshotError(SnapshotError::Kind::bad_header,
                                    "snapshot: unknown field '" + name + "'");
            in.read(reinterpret_cast<char*>(f->v.data()),
                    static_cast<std::streamsize>(f->v.size() * sizeof(double)));
            if (static_cast<std::size_t>(in.gcount()) != f->v.size() * sizeof(double))
                throw SnapshotError(SnapshotError::Kind::truncated_payload,
                                    "snapshot: truncated payload while reading field '" +
                                        name + "'");
        }

        auto [vr, vz] = velocity_from_stream(out.state.psi_theta);
        out.state.v_r = std::move(vr);
        out.state.v_z = std::move(vz);
        for (int k = 0; k < grid.nz; ++k)
            for (int j = 0; j < grid.nr; ++j)
                out.state.v_theta.at(j, k) = out.state.gamma.at(j, k) / grid.r(j);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw SnapshotError(SnapshotError::Kind::bad_header,
                            std::string("snapshot: malformed header field: ") + e.what());
    }
}

} // namespace axicrit
