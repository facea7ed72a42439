#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "axicrit/diagnostics.hpp"
#include "axicrit/elliptic.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/state.hpp"

namespace axicrit {

// ---------------------------------------------------------------------------
// The inequality lab runs on a dedicated fine 1D radial mesh, logarithmically
// spaced so the |ln r| weights near the axis are actually resolved. The mesh
// stops at r_min; the weight mass below it is bounded analytically
// (int_0^rmin dr/(r ln^2 r) = 1/|ln rmin|) and reported as an error bar.

struct LabMesh {
    std::vector<double> r;
    double r_min = 1e-8;
    double r_max = 1.0;
    double h(int i) const { return r[static_cast<std::size_t>(i) + 1] - r[static_cast<std::size_t>(i)]; }
    int n() const { return static_cast<int>(r.size()); }
};

inline LabMesh make_lab_mesh(int n = 16384, double r_min = 1e-8, double r_max = 1.0) {
    if (n < 16) throw ConfigError("lab mesh: need at least 16 points");
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw ConfigError("lab mesh: need 0 < r_min < r_max");
    LabMesh m;
    m.r_min = r_min;
    m.r_max = r_max;
    m.r.resize(static_cast<std::size_t>(n));
    const double la = std::log(r_min), lb = std::log(r_max);
    for (int i = 0; i < n; ++i)
        m.r[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1.0));
    return m;
}

/// One radial function on the lab mesh with its analytic derivative.
struct RadialProfile {
    const LabMesh* mesh = nullptr;
    std::vector<double> val, dval;
    double support_hi = 0.0;

    static RadialProfile from(const LabMesh& m, double support_hi,
                              const std::function<double(double)>& f,
                              const std::function<double(double)>& df) {
        RadialProfile p;
        p.mesh = &m;
        p.support_hi = support_hi;
        p.val.resize(m.r.size());
        p.dval.resize(m.r.size());
        for (std::size_t i = 0; i < m.r.size(); ++i) {
            p.val[i] = f(m.r[i]);
            p.dval[i] = df(m.r[i]);
        }
        return p;
    }
};

/// Smooth cutoff phi(r/delta): exactly 1 for r <= delta, 0 for r >= 2 delta,
/// quintic blend between.
inline RadialProfile cutoff_profile(const LabMesh& m, double delta) {
    if (!(delta > 0.0)) throw ConfigError("cutoff: delta must be positive");
    if (!(2.0 * delta < m.r_max))
        throw ConfigError("cutoff: support 2*delta must fit inside the lab mesh");
    return RadialProfile::from(
        m, 2.0 * delta, [delta](double r) { return plateau(r, delta, 2 * delta); },
        [delta](double r) { return plateau_deriv(r, delta, 2 * delta); });
}

/// Composite Simpson rule in log space for integrals int F(r) dr: the nodes
/// are uniform in u = ln r, so int F dr = int F(e^u) e^u du with a smooth
/// integrand. The callback supplies F at node index i.
template <typename NodeFn>
inline double lab_integral(const LabMesh& m, NodeFn&& F) {
    const int n = m.n();
    const double hu = std::log(m.r_max / m.r_min) / (n - 1);
    auto G = [&](int i) { return F(i) * m.r[static_cast<std::size_t>(i)]; };
    double acc = 0.0;
    int i = 0;
    for (; i + 2 < n; i += 2)
        acc += hu / 3.0 * (G(i) + 4.0 * G(i + 1) + G(i + 2));
    if (i + 1 < n) acc += 0.5 * hu * (G(i) + G(i + 1)); // odd tail interval
    return acc;
}

/// int w(r) g(r)^2 dr. Nodes where g vanishes contribute nothing, even where
/// the weight itself is singular (the log weight blows up at r = 1).
inline double lab_weighted_sq(const RadialProfile& g,
                              const std::function<double(double)>& w) {
    const LabMesh& m = *g.mesh;
    return lab_integral(m, [&](int i) {
        const std::size_t a = static_cast<std::size_t>(i);
        return g.val[a] == 0.0 ? 0.0 : g.val[a] * g.val[a] * w(m.r[a]);
    });
}

/// int g'(r)^2 r dr using the stored analytic derivative.
inline double lab_dirichlet_energy(const RadialProfile& g) {
    const LabMesh& m = *g.mesh;
    return lab_integral(m, [&](int i) {
        const std::size_t a = static_cast<std::size_t>(i);
        return g.dval[a] * g.dval[a] * m.r[a];
    });
}

// ---------------------------------------------------------------------------
// Log-Hardy inequality int g^2 / (r^2 |ln r|^2) dx <= int |d_r g|^2 dx for
// profiles supported in small r.

struct HardyRatio {
    double lhs = 0.0;       // int g^2/(r |ln r|^2) dr
    double rhs = 0.0;       // int g'^2 r dr
    double ratio = 0.0;     // rhs / lhs
    double tail_bound = 0.0; // analytic bound on the weight mass below r_min
};

inline HardyRatio hardy_log_ratio(const RadialProfile& g) {
    const LabMesh& m = *g.mesh;
    if (!(g.support_hi < 0.5))
        throw ConfigError("hardy_log_ratio: profile support must lie in r < 1/2");
    HardyRatio out;
    out.lhs = lab_weighted_sq(g, [](double r) {
        const double lg = std::log(r);
        return 1.0 / (r * lg * lg);
    });
    out.rhs = lab_dirichlet_energy(g);
    out.tail_bound = g.val.front() * g.val.front() / std::fabs(std::log(m.r_min));
    out.ratio = out.lhs > 0.0 ? out.rhs / out.lhs : 0.0;
    return out;
}

struct HardyEigenReport {
    double lambda_min = 0.0;
    double delta = 0.0;
    int iterations = 0;
    bool converged = false;
    int n_interior = 0;
    double tail_bound = 0.0;
};

/// Smallest Rayleigh quotient int g'^2 r dr / int g^2/(r ln^2 r) dr over
/// profiles supported in (0, 2 delta] representable on the lab mesh
/// (homogeneous ends), via inverse power iteration on the generalized
/// tridiagonal eigenproblem S g = lambda M g.
inline HardyEigenReport hardy_best_constant(const LabMesh& m, double delta,
                                            int max_iter = 5000, double tol = 1e-12) {
    if (!(delta > 0.0 && 2.0 * delta < 0.5))
        throw ConfigError("hardy_best_constant: need 0 < 2*delta < 1/2");

    // interior nodes strictly inside (r_min, 2 delta)
    int hi = 0;
    while (hi + 1 < m.n() && m.r[static_cast<std::size_t>(hi + 1)] < 2.0 * delta) ++hi;
    const int n = hi - 1; // nodes 1..hi-1 are free
    HardyEigenReport rep;
    rep.delta = delta;
    rep.n_interior = n;
    rep.tail_bound = 1.0 / std::fabs(std::log(m.r_min));
    if (n < 4) throw ConfigError("hardy_best_constant: mesh too coarse for this delta");

    auto rr = [&](int node) { return m.r[static_cast<std::size_t>(node)]; };
    std::vector<double> sd(n), su(n, 0.0), md(n);
    for (int i = 0; i < n; ++i) {
        const int node = i + 1;
        const double hl = rr(node) - rr(node - 1);
        const double hr = rr(node + 1) - rr(node);
        const double rl = 0.5 * (rr(node) + rr(node - 1));
        const double rmid = 0.5 * (rr(node) + rr(node + 1));
        sd[i] = rl / hl + rmid / hr;
        if (i + 1 < n) su[i] = -rmid / hr;
        const double lg = std::log(rr(node));
        md[i] = 0.5 * (hl + hr) / (rr(node) * lg * lg);
    }

    // Thomas factorization of S
    std::vector<double> cp(n, 0.0), iv(n, 0.0);
    iv[0] = 1.0 / sd[0];
    cp[0] = su[0] * iv[0];
    for (int i = 1; i < n; ++i) {
        const double den = sd[i] - su[i - 1] * cp[i - 1];
        if (den <= 0.0) throw InternalError("hardy eigenproblem: non-SPD stiffness");
        iv[i] = 1.0 / den;
        if (i + 1 < n) cp[i] = su[i] * iv[i];
    }
    auto solve_S = [&](std::vector<double>& x) {
        x[0] *= iv[0];
        for (int i = 1; i < n; ++i) x[i] = (x[i] - su[i - 1] * x[i - 1]) * iv[i];
        for (int i = n - 2; i >= 0; --i) x[i] -= cp[i] * x[i + 1];
    };

    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0.0, lambda_prev = -1.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        for (int i = 0; i < n; ++i) y[i] = md[i] * x[i];
        solve_S(y);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += md[i] * y[i] * y[i];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw InternalError("hardy eigenproblem: zero iterate");
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;

        // Rayleigh quotient x^T S x / x^T M x
        double sx = 0.0, mx = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = sd[i] * x[i];
            if (i > 0) row += su[i - 1] * x[i - 1];
            if (i + 1 < n) row += su[i] * x[i + 1];
            sx += x[i] * row;
            mx += md[i] * x[i] * x[i];
        }
        lambda = sx / mx;
        if (lambda_prev > 0.0 && std::fabs(lambda - lambda_prev) <= tol * lambda) {
            rep.converged = true;
            ++it;
            break;
        }
        lambda_prev = lambda;
    }
    rep.lambda_min = lambda;
    rep.iterations = it;
    return rep;
}

// ---------------------------------------------------------------------------
// Corollary chain: from the log-critical pointwise bound through the cutoff
// split to the two form-boundedness inequalities, plus the closing threshold
// 16 C1^2 |ln delta|^{-2} <= delta*.

/// Gamma = C1 |ln r|^{-2} on r <= delta0, plateau-cut to zero by 2 delta0.
inline RadialProfile log_critical_gamma(const LabMesh& m, double c1, double delta0) {
    if (!(delta0 > 0.0 && delta0 < 0.5))
        throw ConfigError("log_critical_gamma: delta0 must lie in (0, 1/2)");
    return RadialProfile::from(
        m, 2.0 * delta0,
        [c1, delta0](double r) {
            const double cut = plateau(r, delta0, 2 * delta0);
            if (cut == 0.0) return 0.0;
            const double lg = std::log(r);
            return c1 / (lg * lg) * cut;
        },
        [c1, delta0](double r) {
            const double cut = plateau(r, delta0, 2 * delta0);
            if (cut == 0.0) return 0.0;
            const double lg = std::log(r);
            const double dcut = plateau_deriv(r, delta0, 2 * delta0);
            return c1 * (-2.0 / (lg * lg * lg * r) * cut + dcut / (lg * lg));
        });
}

struct ChainPerTest {
    std::string name;
    double A1 = 0.0, A2 = 0.0, B = 0.0, D = 0.0;
    double c21 = 0.0; // smallest workable C in (2-1); 0 when the main term suffices
    double c22 = 0.0;
    bool holds21 = true, holds22 = true;
};

struct ChainReport {
    bool cd_satisfied = false;
    double c1 = 0.0, delta0 = 0.0, delta = 0.0, delta_star = 0.0;
    std::vector<ChainPerTest> per_test;
    double c21_max = 0.0, c22_max = 0.0;
    bool all_hold = true;
    double delta_threshold_closed_form = 0.0;
    double delta_threshold_bisection = 0.0;
    // empirical leading coefficient sup A2/B over sub-delta supported tests,
    // at delta and delta/2 (their ratio tracks |ln delta|^{-2})
    double leading_coeff_delta = 0.0;
    double leading_coeff_half_delta = 0.0;
};

inline double chain_threshold_delta(double c1, double delta_star) {
    return std::exp(-std::sqrt(16.0 * c1 * c1 / delta_star));
}

inline ChainReport corollary_chain(const LabMesh& m, const RadialProfile& gamma,
                                   double c1, double delta0, double delta,
                                   double delta_star, int n_dyadic = 10) {
    if (!(delta > 0.0 && 2.0 * delta < delta0))
        throw ConfigError("corollary_chain: need 0 < 2*delta < delta0");

    // hypothesis check: |Gamma| <= C1 |ln r|^{-2} on r <= delta0
    for (std::size_t i = 0; i < m.r.size() && m.r[i] <= delta0; ++i) {
        const double lg = std::log(m.r[i]);
        if (std::fabs(gamma.val[i]) > c1 / (lg * lg) * (1.0 + 1e-12))
            throw ConfigError("corollary_chain: profile violates the log-critical "
                              "bound at r = " + std::to_string(m.r[i]));
    }

    ChainReport rep;
    rep.cd_satisfied = true;
    rep.c1 = c1;
    rep.delta0 = delta0;
    rep.delta = delta;
    rep.delta_star = delta_star;

    auto test_integrals = [&](const RadialProfile& f, const std::string& name) {
        ChainPerTest t;
        t.name = name;
        // |v^theta|/r = |Gamma|/r^2 and |v^theta|^2 = Gamma^2/r^2 against r dr
        const LabMesh& mm = *f.mesh;
        t.A1 = lab_integral(mm, [&](int i) {
            const std::size_t q = static_cast<std::size_t>(i);
            const double gr = std::fabs(gamma.val[q]);
            return gr * f.val[q] * f.val[q] / mm.r[q];
        });
        t.A2 = lab_integral(mm, [&](int i) {
            const std::size_t q = static_cast<std::size_t>(i);
            const double gr = gamma.val[q];
            return gr * gr * f.val[q] * f.val[q] / mm.r[q];
        });
        t.B = lab_integral(mm, [&](int i) {
            const std::size_t q = static_cast<std::size_t>(i);
            return f.dval[q] * f.dval[q] * mm.r[q];
        });
        t.D = lab_integral(mm, [&](int i) {
            const std::size_t q = static_cast<std::size_t>(i);
            return mm.r[q] >= delta ? f.val[q] * f.val[q] * mm.r[q] : 0.0;
        });
        const double remainder = t.D / (delta * delta);
        const double lg2 = std::pow(std::log(delta), 2.0);
        const double excess21 = t.A1 - 4.0 * c1 * t.B;
        const double excess22 = t.A2 - 8.0 * c1 * c1 / lg2 * t.B;
        if (excess21 > 0.0) {
            if (remainder > 0.0)
                t.c21 = excess21 / remainder;
            else
                t.holds21 = false;
        }
        if (excess22 > 0.0) {
            if (remainder > 0.0)
                t.c22 = excess22 / remainder;
            else
                t.holds22 = false;
        }
        return t;
    };

    for (int mdy = 1; mdy <= n_dyadic; ++mdy) {
        const double dm = std::pow(2.0, -mdy) * 0.25 * m.r_max;
        if (2.0 * dm >= m.r_max || dm < 4.0 * m.r_min) break;
        RadialProfile f = cutoff_profile(m, dm);
        ChainPerTest t = test_integrals(f, "dyadic_" + std::to_string(mdy));
        rep.c21_max = std::max(rep.c21_max, t.c21);
        rep.c22_max = std::max(rep.c22_max, t.c22);
        rep.all_hold = rep.all_hold && t.holds21 && t.holds22;
        rep.per_test.push_back(std::move(t));
    }

    rep.delta_threshold_closed_form = chain_threshold_delta(c1, delta_star);
    // bisection on the monotone condition 16 C1^2 |ln d|^{-2} <= delta*
    {
        double lo = 1e-300, hi = 0.5;
        for (int it = 0; it < 200; ++it) {
            const double mid = std::sqrt(lo * hi);
            const double lg = std::log(mid);
            if (16.0 * c1 * c1 / (lg * lg) <= delta_star)
                lo = mid;
            else
                hi = mid;
        }
        rep.delta_threshold_bisection = lo;
    }

    // Empirical |ln delta|^{-2} scaling of the potential: sup A2/B over test
    // functions built as plateaus in u = |ln r|, scaled by u_delta, so the
    // whole sub-family rescales exactly when delta changes.
    auto leading = [&](double dd) {
        const double ud = std::fabs(std::log(dd));
        double best = 0.0;
        for (auto [lo, hi] : {std::pair{1.5, 3.0}, {2.0, 4.0}}) {
            if (hi * ud >= std::fabs(std::log(m.r_min))) continue; // off-mesh
            RadialProfile f = RadialProfile::from(
                m, std::exp(-lo * ud),
                [ud, lo, hi](double r) {
                    const double u = std::fabs(std::log(r)) / ud;
                    if (u <= lo || u >= hi) return 0.0;
                    // plateau in u between lo and hi with smooth shoulders
                    const double up = plateau(u, 0.5 * (lo + hi), hi);
                    const double dn = 1.0 - plateau(u, lo, 0.5 * (lo + hi));
                    return up * dn;
                },
                [ud, lo, hi](double r) {
                    const double u = std::fabs(std::log(r)) / ud;
                    if (u <= lo || u >= hi) return 0.0;
                    const double mid = 0.5 * (lo + hi);
                    const double up = plateau(u, mid, hi);
                    const double dn = 1.0 - plateau(u, lo, mid);
                    const double dup = plateau_deriv(u, mid, hi);
                    const double ddn = -plateau_deriv(u, lo, mid);
                    const double dudr = -1.0 / (r * ud);
                    return (dup * dn + up * ddn) * dudr;
                });
            ChainPerTest t = test_integrals(f, "log_scaled");
            if (t.B > 0.0) best = std::max(best, t.A2 / t.B);
        }
        return best;
    };
    rep.leading_coeff_delta = leading(delta);
    rep.leading_coeff_half_delta = leading(delta / 2.0);
    return rep;
}

// ---------------------------------------------------------------------------
// Empirical bracketing of the absolute constant in the v^r/r gradient
// estimates: ratios over a seeded ensemble of smooth vorticity fields plus a
// structured single mode checked against a refined 1D oracle.

struct K0GridResult {
    int nr = 0, nz = 0;
    int applicable = 0;
    double max_R1 = 0.0, median_R1 = 0.0;
    double max_R2 = 0.0, median_R2 = 0.0;
};

struct K0Report {
    K0GridResult coarse, fine;
    double drift_R1 = 0.0; // relative drift of max R1 between the two grids
    double drift_R2 = 0.0;
    double single_mode_R1 = 0.0;
    double single_mode_R1_oracle = 0.0;
    double single_mode_rel_err = 0.0;
};

namespace detail {

struct EnsembleMember {
    std::function<double(double, double)> omega;
};

inline std::vector<EnsembleMember> k0_ensemble(unsigned seed, int count, double r_max,
                                               double z_len) {
    std::mt19937 gen(seed);
    auto uni = [&gen]() { return (gen() >> 8) * (1.0 / 16777216.0); };
    std::vector<EnsembleMember> members;
    for (int i = 0; i < count; ++i) {
        const double rs = r_max * (0.35 + 0.4 * uni());
        std::array<double, 3> a{}, ph{};
        std::array<int, 3> mz{};
        for (int q = 0; q < 3; ++q) {
            a[static_cast<std::size_t>(q)] = 2.0 * uni() - 1.0;
            ph[static_cast<std::size_t>(q)] = 2.0 * M_PI * uni();
            mz[static_cast<std::size_t>(q)] = 1 + static_cast<int>(uni() * 3);
        }
        members.push_back({[rs, a, ph, mz, z_len](double r, double z) {
            if (r >= rs) return 0.0;
            const double x = r / rs;
            const double shape = x * std::pow(1.0 - x * x, 3);
            double acc = 0.0;
            for (int q = 0; q < 3; ++q)
                acc += a[static_cast<std::size_t>(q)] *
                       std::cos(2.0 * M_PI * mz[static_cast<std::size_t>(q)] * z / z_len +
                                ph[static_cast<std::size_t>(q)]);
            return shape * acc;
        }});
    }
    return members;
}

inline K0GridResult k0_on_grid(const std::vector<EnsembleMember>& members, int nr, int nz,
                               double r_max, double z_len) {
    Grid g = build_grid(nr, nz, r_max, z_len);
    StreamSolver solver(g);
    K0GridResult res;
    res.nr = nr;
    res.nz = nz;
    std::vector<double> r1s, r2s;
    for (const auto& mem : members) {
        FlowState s(g);
        s.omega_theta.fill(mem.omega);
        refresh_derived(s, solver);
        Lemma1Ratios l = lemma1_ratios(s);
        if (!l.applicable) continue;
        r1s.push_back(l.R1);
        r2s.push_back(l.R2);
    }
    res.applicable = static_cast<int>(r1s.size());
    if (r1s.empty()) return res;
    auto stats = [](std::vector<double>& v, double& mx, double& med) {
        std::sort(v.begin(), v.end());
        mx = v.back();
        med = v[v.size() / 2];
    };
    stats(r1s, res.max_R1, res.median_R1);
    stats(r2s, res.max_R2, res.median_R2);
    return res;
}

/// 1D oracle for the single-mode ratio: refined nodal BVP solve of
/// (d_r((1/r) d_r(r .)) - k^2) psi = -rho, then the mode-wise quadratures of
/// ||grad(v^r/r)|| and ||Omega||.
inline double k0_single_mode_oracle(int nr, double r_max, double kmode,
                                    const std::function<double(double)>& rho) {
    const int refine = 16;
    const int n = nr * refine;
    const double h = r_max / n;
    std::vector<double> a(n - 1, 0.0), b(n - 1, 0.0), c(n - 1, 0.0), rhs(n - 1, 0.0);
    for (int i = 1; i < n; ++i) {
        const double r = i * h;
        const double rm = (i - 0.5) * h, rp = (i + 0.5) * h;
        const int row = i - 1;
        if (i > 1) a[row] = (i - 1) * h / (h * h * rm);
        b[row] = -r / (h * h * rm) - r / (h * h * rp) - kmode * kmode;
        if (i < n - 1) c[row] = (i + 1) * h / (h * h * rp);
        rhs[row] = -rho(r);
    }
    for (int i = 1; i < n - 1; ++i) {
        const double f = a[i] / b[i - 1];
        b[i] -= f * c[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<double> psi(n - 1);
    psi[n - 2] = rhs[n - 2] / b[n - 2];
    for (int i = n - 3; i >= 0; --i) psi[i] = (rhs[i] - c[i] * psi[i + 1]) / b[i];

    // phi = psi/r at nodes 1..n-1; grad stats of v^r/r = -k phi cos(kz)
    std::vector<double> phi(n - 1);
    for (int i = 1; i < n; ++i) phi[i - 1] = psi[i - 1] / (i * h);
    double grad_sq = 0.0, omega_sq = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        const double r = i * h;
        const double dphi = (phi[i] - phi[i - 2 >= 0 ? i - 2 : 0]) / (2 * h);
        grad_sq += (kmode * kmode * dphi * dphi +
                    std::pow(kmode, 4) * phi[i - 1] * phi[i - 1]) * r * h;
        const double om = rho(r) / r;
        omega_sq += om * om * r * h;
    }
    return std::sqrt(grad_sq / omega_sq);
}

} // namespace detail

inline K0Report estimate_k0(int nr, int nz, double r_max, double z_len, unsigned seed,
                            int count) {
    auto members = detail::k0_ensemble(seed, count, r_max, z_len);
    K0Report rep;
    rep.coarse = detail::k0_on_grid(members, nr, nz, r_max, z_len);
    rep.fine = detail::k0_on_grid(members, 2 * nr, 2 * nz, r_max, z_len);
    if (rep.coarse.max_R1 > 0.0) {
        rep.drift_R1 = std::fabs(rep.fine.max_R1 - rep.coarse.max_R1) / rep.coarse.max_R1;
        rep.drift_R2 = std::fabs(rep.fine.max_R2 - rep.coarse.max_R2) / rep.coarse.max_R2;
    }

    // structured single mode
    const double rs = 0.8 * r_max;
    auto rho = [rs](double r) {
        if (r >= rs) return 0.0;
        const double x = r / rs;
        return r * std::pow(1.0 - x * x, 3);
    };
    const double kmode = 2.0 * M_PI / z_len;
    Grid g = build_grid(nr, nz, r_max, z_len);
    StreamSolver solver(g);
    FlowState s(g);
    s.omega_theta.fill([&](double r, double z) { return rho(r) * std::sin(kmode * z); });
    refresh_derived(s, solver);
    Lemma1Ratios l = lemma1_ratios(s);
    rep.single_mode_R1 = l.applicable ? l.R1 : 0.0;
    rep.single_mode_R1_oracle = detail::k0_single_mode_oracle(nr, r_max, kmode, rho);
    if (rep.single_mode_R1_oracle > 0.0)
        rep.single_mode_rel_err =
            std::fabs(rep.single_mode_R1 - rep.single_mode_R1_oracle) /
            rep.single_mode_R1_oracle;
    return rep;
}

// ---------------------------------------------------------------------------
// 1D form-boundedness Rayleigh ratios on the lab mesh (used by the scaling
// tests, where the rescaled mesh maps node-for-node).

struct FbcRatios1D {
    double A1 = 0.0, A2 = 0.0, B = 0.0, D = 0.0;
    double ratio1 = 0.0; // [A1 - C0 D]+ / B
    double ratio2 = 0.0;
};

inline FbcRatios1D fbc_ratios_1d(const RadialProfile& v_theta, const RadialProfile& f,
                                 double r0, double c0) {
    const LabMesh& m = *f.mesh;
    FbcRatios1D out;
    out.A1 = lab_integral(m, [&](int i) {
        const std::size_t q = static_cast<std::size_t>(i);
        return std::fabs(v_theta.val[q]) * f.val[q] * f.val[q];
    });
    out.A2 = lab_integral(m, [&](int i) {
        const std::size_t q = static_cast<std::size_t>(i);
        return v_theta.val[q] * v_theta.val[q] * f.val[q] * f.val[q] * m.r[q];
    });
    out.B = lab_integral(m, [&](int i) {
        const std::size_t q = static_cast<std::size_t>(i);
        return f.dval[q] * f.dval[q] * m.r[q];
    });
    out.D = lab_integral(m, [&](int i) {
        const std::size_t q = static_cast<std::size_t>(i);
        return m.r[q] >= r0 ? f.val[q] * f.val[q] * m.r[q] : 0.0;
    });
    if (out.B > 0.0) {
        out.ratio1 = std::max(0.0, out.A1 - c0 * out.D) / out.B;
        out.ratio2 = std::max(0.0, out.A2 - c0 * out.D) / out.B;
    }
    return out;
}

} // namespace axicrit
