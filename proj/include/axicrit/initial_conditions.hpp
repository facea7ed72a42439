#pragma once

#include <cmath>
#include <random>

#include "axicrit/config.hpp"
#include "axicrit/diagnostics.hpp"
#include "axicrit/manufactured.hpp"
#include "axicrit/state.hpp"

namespace axicrit {

inline ManufacturedSolution manufactured_for(const RunConfig& cfg) {
    ManufacturedSolution mms;
    mms.R = cfg.r_max;
    mms.L = cfg.z_len;
    mms.nu = cfg.nu;
    mms.amp = cfg.amplitude;
    return mms;
}

/// Build (Gamma_0, omega^theta_0) for the configured kind and return a fully
/// consistent state at t = 0. All stochastic kinds draw raw mt19937 words, so
/// equal seeds give identical fields everywhere.
inline FlowState make_initial_condition(const RunConfig& cfg, const Grid& g,
                                        const StreamSolver& solver) {
    FlowState s(g);
    const double A = cfg.amplitude;
    const double rs = cfg.support_radius;

    switch (cfg.ic_kind) {
        case IcKind::zero:
            break;

        case IcKind::rigid_swirl_bump:
            s.gamma.fill([&](double r, double) {
                return A * r * r * plateau(r, 0.5 * rs, rs);
            });
            break;

        case IcKind::vortex_ring_swirl: {
            // Gaussian vorticity ring at (0.6 rs, z_len/2), exactly periodic
            // in z, tapered to compact support, plus a swirl bump.
            const double rc = 0.6 * rs;
            const double zc = 0.5 * g.z_len;
            const double sig = 0.25 * rs;
            const double zfac = g.z_len / (M_PI * sig);
            s.omega_theta.fill([&](double r, double z) {
                const double sz = std::sin(M_PI * (z - zc) / g.z_len);
                const double gz = std::exp(-zfac * zfac * sz * sz);
                const double gr = std::exp(-(r - rc) * (r - rc) / (sig * sig));
                return A * (r / rc) * gr * gz * plateau(r, 0.8 * rs, rs);
            });
            s.gamma.fill([&](double r, double) {
                return 0.3 * A * r * r * plateau(r, 0.5 * rs, rs);
            });
            break;
        }

        case IcKind::log_critical_swirl:
            // Gamma = C1 |ln r|^{-2} up to delta0, cut to zero by 2 delta0,
            // so log_criticality(Gamma_0, delta0) returns C1 exactly.
            s.gamma.fill([&](double r, double) {
                const double cut = plateau(r, cfg.delta0, 2.0 * cfg.delta0);
                if (cut == 0.0) return 0.0;
                const double lg = std::log(r);
                return A / (lg * lg) * cut;
            });
            break;

        case IcKind::random_spectrum: {
            std::mt19937 gen(cfg.seed);
            auto uni = [&gen]() { return (gen() >> 8) * (1.0 / 16777216.0); };
            struct Term {
                double a, phase;
                int m, n;
            };
            std::vector<Term> gt, ot;
            for (int i = 0; i < 6; ++i)
                gt.push_back({2.0 * uni() - 1.0, 2.0 * M_PI * uni(),
                              static_cast<int>(uni() * 3.0), 1 + static_cast<int>(uni() * 2.0)});
            for (int i = 0; i < 6; ++i)
                ot.push_back({2.0 * uni() - 1.0, 2.0 * M_PI * uni(),
                              static_cast<int>(uni() * 3.0), 1 + static_cast<int>(uni() * 2.0)});
            s.gamma.fill([&](double r, double z) {
                const double cut = plateau(r, 0.5 * rs, rs);
                if (cut == 0.0) return 0.0;
                double acc = 0.0;
                for (const Term& t : gt)
                    acc += t.a * std::pow(r / rs, 2 * t.n) *
                           std::cos(2.0 * M_PI * t.m * z / g.z_len + t.phase);
                return A * acc * cut;
            });
            s.omega_theta.fill([&](double r, double z) {
                const double cut = plateau(r, 0.5 * rs, rs);
                if (cut == 0.0) return 0.0;
                double acc = 0.0;
                for (const Term& t : ot)
                    acc += t.a * (r / rs) * std::pow(r / rs, 2 * (t.n - 1)) *
                           std::cos(2.0 * M_PI * t.m * z / g.z_len + t.phase);
                return A * acc * cut;
            });
            break;
        }

        case IcKind::manufactured: {
            ManufacturedSolution mms = manufactured_for(cfg);
            s.gamma.fill([&](double r, double z) { return mms.gamma(r, z, 0.0); });
            s.omega_theta.fill(
                [&](double r, double z) { return mms.omega_theta(r, z, 0.0); });
            break;
        }
    }

    refresh_derived(s, solver);
    return s;
}

} // namespace axicrit
