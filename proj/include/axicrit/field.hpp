#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axicrit/errors.hpp"
#include "axicrit/grid.hpp"

namespace axicrit {

/// Reflection rule across the axis r = 0, used to fill the single ghost cell
/// the second-order stencils need. Odd fields (v^r, v^theta, omega^theta,
/// psi^theta, ...) mirror with a sign flip and vanish at the axis. Even
/// fields mirror without one; that covers both genuinely even profiles (v^z,
/// J, Omega) and the swirl Gamma ~ a(z) r^2, whose correct reflection is the
/// even one even though it vanishes at the axis.
enum class AxisParity { odd, even };

/// Ghost rule at the outer boundary r = r_max. dirichlet_zero reflects with a
/// sign flip through a zero boundary value (Gamma, omega^theta, psi^theta and
/// everything derived from them); neumann_zero copies (v^z).
enum class OuterBc { dirichlet_zero, neumann_zero };

/// One axisymmetric scalar sampled at cell centers, r index fastest.
struct ScalarField {
    const Grid* grid = nullptr;
    AxisParity parity = AxisParity::even;
    OuterBc outer = OuterBc::dirichlet_zero;
    std::vector<double> v;

    ScalarField() = default;
    ScalarField(const Grid& g, AxisParity p, OuterBc o = OuterBc::dirichlet_zero)
        : grid(&g), parity(p), outer(o), v(g.cells(), 0.0) {}

    double& at(int j, int k) { return v[grid->idx(j, k)]; }
    double at(int j, int k) const { return v[grid->idx(j, k)]; }

    /// Value with ghost resolution: j may be -1 or nr, k wraps periodically.
    double gval(int j, int k) const {
        const int nz = grid->nz;
        k = (k % nz + nz) % nz;
        if (j == -1)
            return parity == AxisParity::odd ? -at(0, k) : at(0, k);
        if (j == grid->nr)
            return outer == OuterBc::dirichlet_zero ? -at(grid->nr - 1, k)
                                                    : at(grid->nr - 1, k);
        return at(j, k);
    }

    /// Fill from a function of (r, z).
    void fill(const std::function<double(double, double)>& f) {
        for (int k = 0; k < grid->nz; ++k)
            for (int j = 0; j < grid->nr; ++j)
                at(j, k) = f(grid->r(j), grid->z(k));
    }
};

inline void require_same_grid(const Grid& g, const ScalarField& f, const char* what) {
    if (f.grid == nullptr || !g.same_shape(*f.grid) || f.v.size() != g.cells())
        throw InternalError(std::string("field/grid shape mismatch in ") + what);
}

/// Index of the first non-finite value, if any.
inline std::optional<std::size_t> first_nonfinite(const ScalarField& f) {
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (!std::isfinite(f.v[i])) return i;
    return std::nullopt;
}

/// Midpoint quadrature of f against r dr dz.
inline double quadrature(const Grid& g, const ScalarField& f) {
    require_same_grid(g, f, "quadrature");
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        double row = 0.0;
        for (int j = 0; j < g.nr; ++j)
            row += f.at(j, k) * g.rc[static_cast<std::size_t>(j)];
        total += row;
    }
    return total * g.dr * g.dz;
}

inline double weighted_l2_norm(const ScalarField& f) {
    const Grid& g = *f.grid;
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        double row = 0.0;
        for (int j = 0; j < g.nr; ++j) {
            const double x = f.at(j, k);
            row += x * x * g.rc[static_cast<std::size_t>(j)];
        }
        total += row;
    }
    return std::sqrt(total * g.dr * g.dz);
}

inline double weighted_lp_norm(const ScalarField& f, double p) {
    if (!(p >= 1.0)) throw InternalError("weighted_lp_norm: p must be >= 1");
    const Grid& g = *f.grid;
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        double row = 0.0;
        for (int j = 0; j < g.nr; ++j)
            row += std::pow(std::fabs(f.at(j, k)), p) * g.rc[static_cast<std::size_t>(j)];
        total += row;
    }
    return std::pow(total * g.dr * g.dz, 1.0 / p);
}

inline double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::fabs(x));
    return m;
}

/// Sup norm restricted to r <= r_cut.
inline double linf_norm_small_r(const ScalarField& f, double r_cut) {
    const Grid& g = *f.grid;
    double m = 0.0;
    for (int j = 0; j < g.nr && g.r(j) <= r_cut; ++j)
        for (int k = 0; k < g.nz; ++k)
            m = std::max(m, std::fabs(f.at(j, k)));
    return m;
}

/// Integral of f(0, z)^2 dz. Even-extendable fields (J, Omega) get their axis
/// value by quadratic extrapolation through the first three cell centers;
/// odd fields vanish at the axis by parity, so the trace is exactly zero.
inline double axis_trace_sq_integral(const ScalarField& f) {
    if (f.parity == AxisParity::odd) return 0.0;
    const Grid& g = *f.grid;
    if (g.nr < 3) throw InternalError("axis_trace_sq_integral: nr < 3");
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        // Lagrange weights for r = 0 through centers at dr/2, 3dr/2, 5dr/2.
        const double f0 = (15.0 * f.at(0, k) - 10.0 * f.at(1, k) + 3.0 * f.at(2, k)) / 8.0;
        total += f0 * f0;
    }
    return total * g.dz;
}

} // namespace axicrit
