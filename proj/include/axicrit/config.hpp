#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "axicrit/diffops.hpp"
#include "axicrit/errors.hpp"

namespace axicrit {

enum class IcKind {
    zero,
    rigid_swirl_bump,
    vortex_ring_swirl,
    log_critical_swirl,
    random_spectrum,
    manufactured
};

inline const char* to_string(IcKind k) {
    switch (k) {
        case IcKind::zero: return "zero";
        case IcKind::rigid_swirl_bump: return "rigid_swirl_bump";
        case IcKind::vortex_ring_swirl: return "vortex_ring_swirl";
        case IcKind::log_critical_swirl: return "log_critical_swirl";
        case IcKind::random_spectrum: return "random_spectrum";
        case IcKind::manufactured: return "manufactured";
    }
    return "?";
}

inline const char* to_string(AdvectionScheme s) {
    return s == AdvectionScheme::upwind1 ? "upwind1" : "centered2";
}

struct RunConfig {
    // grid
    int nr = 0, nz = 0;
    double r_max = 0.0, z_len = 0.0;
    // physics
    double nu = 1.0;
    // time
    double t_end = 0.0;
    double cfl_safety = 0.3;
    AdvectionScheme scheme = AdvectionScheme::upwind1;
    std::optional<double> dt_override; // fixed-step fixture (convergence and
                                       // forced-instability tests)
    // initial condition
    IcKind ic_kind = IcKind::zero;
    double amplitude = 1.0;
    double support_radius = 0.0; // 0 -> default r_max/4
    std::uint32_t seed = 12345;
    // diagnostics
    double sample_interval = 0.0; // 0 -> t_end/50 (or 1 if t_end == 0)
    double delta0 = 0.25;
    double r0 = 0.0; // 0 -> r_max/4
    double delta_small = 0.01;
    int fbc_family_size = 8;
    std::vector<double> c0_grid = {0.0, 1.0};
    // output
    std::string directory = "out";
    double snapshot_interval = 0.0; // 0 disables snapshots
    // inequality lab
    double ineq_c1 = 1.0;
    double ineq_delta_star = 0.1;
    int lab_points = 16384;
    double lab_r_min = 1e-8;
    std::vector<double> hardy_deltas = {0.2, 0.1, 0.05};
    double chain_delta = 0.0; // 0 -> delta0/8
    std::uint32_t k0_seed = 2025;
    int k0_count = 32;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
    }
}

inline long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + v + "'");
    }
}

inline std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "' expects a list");
    return out;
}

} // namespace detail

/// Parse a flat key = value document with dotted section keys. Unknown keys
/// are rejected; the returned config is fully validated with defaults filled.
inline RunConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not of the form key = value");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config: empty key or value on line " +
                              std::to_string(lineno));
        if (kv.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = val;
    }

    RunConfig c;
    bool have_nr = false, have_nz = false, have_rmax = false, have_zlen = false,
         have_tend = false;

    for (const auto& [key, val] : kv) {
        using detail::parse_double;
        using detail::parse_int;
        using detail::parse_list;
        if (key == "grid.nr") { c.nr = static_cast<int>(parse_int(key, val)); have_nr = true; }
        else if (key == "grid.nz") { c.nz = static_cast<int>(parse_int(key, val)); have_nz = true; }
        else if (key == "grid.r_max") { c.r_max = parse_double(key, val); have_rmax = true; }
        else if (key == "grid.z_len") { c.z_len = parse_double(key, val); have_zlen = true; }
        else if (key == "physics.nu") c.nu = parse_double(key, val);
        else if (key == "time.t_end") { c.t_end = parse_double(key, val); have_tend = true; }
        else if (key == "time.cfl_safety") c.cfl_safety = parse_double(key, val);
        else if (key == "time.advection_scheme") {
            if (val == "upwind1") c.scheme = AdvectionScheme::upwind1;
            else if (val == "centered2") c.scheme = AdvectionScheme::centered2;
            else throw ConfigError("config: time.advection_scheme must be upwind1 or "
                                   "centered2, got '" + val + "'");
        }
        else if (key == "time.dt_override") c.dt_override = parse_double(key, val);
        else if (key == "ic.kind") {
            if (val == "zero") c.ic_kind = IcKind::zero;
            else if (val == "rigid_swirl_bump") c.ic_kind = IcKind::rigid_swirl_bump;
            else if (val == "vortex_ring_swirl") c.ic_kind = IcKind::vortex_ring_swirl;
            else if (val == "log_critical_swirl") c.ic_kind = IcKind::log_critical_swirl;
            else if (val == "random_spectrum") c.ic_kind = IcKind::random_spectrum;
            else if (val == "manufactured") c.ic_kind = IcKind::manufactured;
            else throw ConfigError("config: unknown ic.kind '" + val + "'");
        }
        else if (key == "ic.amplitude") c.amplitude = parse_double(key, val);
        else if (key == "ic.support_radius") c.support_radius = parse_double(key, val);
        else if (key == "ic.seed") c.seed = static_cast<std::uint32_t>(parse_int(key, val));
        else if (key == "diag.sample_interval") c.sample_interval = parse_double(key, val);
        else if (key == "diag.delta0") c.delta0 = parse_double(key, val);
        else if (key == "diag.r0") c.r0 = parse_double(key, val);
        else if (key == "diag.delta_small") c.delta_small = parse_double(key, val);
        else if (key == "diag.fbc_family_size")
            c.fbc_family_size = static_cast<int>(parse_int(key, val));
        else if (key == "diag.c0_grid") c.c0_grid = parse_list(key, val);
        else if (key == "output.directory") c.directory = val;
        else if (key == "output.snapshot_interval") c.snapshot_interval = parse_double(key, val);
        else if (key == "ineq.c1") c.ineq_c1 = parse_double(key, val);
        else if (key == "ineq.delta_star") c.ineq_delta_star = parse_double(key, val);
        else if (key == "ineq.lab_points") c.lab_points = static_cast<int>(parse_int(key, val));
        else if (key == "ineq.lab_r_min") c.lab_r_min = parse_double(key, val);
        else if (key == "ineq.hardy_deltas") c.hardy_deltas = parse_list(key, val);
        else if (key == "ineq.chain_delta") c.chain_delta = parse_double(key, val);
        else if (key == "ineq.k0_seed") c.k0_seed = static_cast<std::uint32_t>(parse_int(key, val));
        else if (key == "ineq.k0_count") c.k0_count = static_cast<int>(parse_int(key, val));
        else throw ConfigError("config: unknown key '" + key + "'");
    }

    if (!(have_nr && have_nz && have_rmax && have_zlen))
        throw ConfigError("config: grid.nr, grid.nz, grid.r_max, grid.z_len are required");
    if (!have_tend) throw ConfigError("config: time.t_end is required");

    // fill defaults that depend on other keys
    if (c.support_radius == 0.0) c.support_radius = c.r_max / 4.0;
    if (c.r0 == 0.0) c.r0 = c.r_max / 4.0;
    if (c.sample_interval == 0.0) c.sample_interval = c.t_end > 0.0 ? c.t_end / 50.0 : 1.0;
    if (c.chain_delta == 0.0) c.chain_delta = c.delta0 / 8.0;

    // validation; every bound printed with its key name
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw ConfigError("config: " + msg);
    };
    require(c.nr >= 4, "grid.nr must be >= 4");
    require(c.nz >= 4, "grid.nz must be >= 4");
    require(c.r_max > 0.0 && std::isfinite(c.r_max), "grid.r_max must be positive");
    require(c.z_len > 0.0 && std::isfinite(c.z_len), "grid.z_len must be positive");
    require(c.nu > 0.0 && std::isfinite(c.nu), "physics.nu must be positive");
    require(c.t_end >= 0.0 && std::isfinite(c.t_end), "time.t_end must be >= 0");
    require(c.cfl_safety > 0.0 && c.cfl_safety <= 1.0,
            "time.cfl_safety must lie in (0, 1]");
    if (c.dt_override)
        require(*c.dt_override > 0.0 && std::isfinite(*c.dt_override),
                "time.dt_override must be positive");
    require(std::isfinite(c.amplitude), "ic.amplitude must be finite");
    require(c.support_radius > 0.0 && c.support_radius <= c.r_max / 2.0,
            "ic.support_radius must lie in (0, r_max/2] (compact-support policy)");
    require(c.sample_interval > 0.0, "diag.sample_interval must be positive");
    require(c.delta0 > 0.0 && c.delta0 < 0.5, "diag.delta0 must lie in (0, 1/2)");
    require(c.r0 > 0.0 && c.r0 < c.r_max, "diag.r0 must lie in (0, r_max)");
    require(c.delta_small > 0.0, "diag.delta_small must be positive");
    require(c.fbc_family_size >= 0, "diag.fbc_family_size must be >= 0");
    for (double x : c.c0_grid) require(x >= 0.0, "diag.c0_grid entries must be >= 0");
    require(!c.directory.empty(), "output.directory must be nonempty");
    require(c.snapshot_interval >= 0.0, "output.snapshot_interval must be >= 0");
    if (c.snapshot_interval > 0.0) {
        const double ratio = c.snapshot_interval / c.sample_interval;
        require(std::fabs(ratio - std::round(ratio)) < 1e-9,
                "output.snapshot_interval must be a multiple of diag.sample_interval");
    }
    if (c.ic_kind == IcKind::log_critical_swirl)
        require(2.0 * c.delta0 <= c.r_max / 2.0,
                "log_critical_swirl needs 2*diag.delta0 <= r_max/2 (compact support)");
    require(c.ineq_c1 > 0.0, "ineq.c1 must be positive");
    require(c.ineq_delta_star > 0.0, "ineq.delta_star must be positive");
    require(c.lab_points >= 256, "ineq.lab_points must be >= 256");
    require(c.lab_r_min > 0.0 && c.lab_r_min < 1e-2, "ineq.lab_r_min must lie in (0, 1e-2)");
    for (double d : c.hardy_deltas)
        require(d > 0.0 && 2.0 * d < 0.5, "ineq.hardy_deltas entries must satisfy 2d < 1/2");
    require(c.chain_delta > 0.0 && 2.0 * c.chain_delta < c.delta0,
            "ineq.chain_delta must satisfy 2*chain_delta < diag.delta0");
    require(c.k0_count >= 1, "ineq.k0_count must be >= 1");
    return c;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

/// The resolved configuration echoed in config-file syntax (what `check`
/// prints).
inline std::string resolved_config_text(const RunConfig& c) {
    std::ostringstream os;
    auto num = [&os](const char* k, double v) {
        char b[64];
        std::snprintf(b, sizeof b, "%.17g", v);
        os << k << " = " << b << "\n";
    };
    os << "grid.nr = " << c.nr << "\n";
    os << "grid.nz = " << c.nz << "\n";
    num("grid.r_max", c.r_max);
    num("grid.z_len", c.z_len);
    num("physics.nu", c.nu);
    num("time.t_end", c.t_end);
    num("time.cfl_safety", c.cfl_safety);
    os << "time.advection_scheme = " << to_string(c.scheme) << "\n";
    if (c.dt_override) num("time.dt_override", *c.dt_override);
    os << "ic.kind = " << to_string(c.ic_kind) << "\n";
    num("ic.amplitude", c.amplitude);
    num("ic.support_radius", c.support_radius);
    os << "ic.seed = " << c.seed << "\n";
    num("diag.sample_interval", c.sample_interval);
    num("diag.delta0", c.delta0);
    num("diag.r0", c.r0);
    num("diag.delta_small", c.delta_small);
    os << "diag.fbc_family_size = " << c.fbc_family_size << "\n";
    os << "diag.c0_grid = ";
    for (std::size_t i = 0; i < c.c0_grid.size(); ++i) {
        char b[64];
        std::snprintf(b, sizeof b, "%.17g", c.c0_grid[i]);
        os << (i ? "," : "") << b;
    }
    os << "\n";
    os << "output.directory = " << c.directory << "\n";
    num("output.snapshot_interval", c.snapshot_interval);
    num("ineq.c1", c.ineq_c1);
    num("ineq.delta_star", c.ineq_delta_star);
    os << "ineq.lab_points = " << c.lab_points << "\n";
    num("ineq.lab_r_min", c.lab_r_min);
    os << "ineq.hardy_deltas = ";
    for (std::size_t i = 0; i < c.hardy_deltas.size(); ++i) {
        char b[64];
        std::snprintf(b, sizeof b, "%.17g", c.hardy_deltas[i]);
        os << (i ? "," : "") << b;
    }
    os << "\n";
    num("ineq.chain_delta", c.chain_delta);
    os << "ineq.k0_seed = " << c.k0_seed << "\n";
    os << "ineq.k0_count = " << c.k0_count << "\n";
    return os.str();
}

} // namespace axicrit
