#pragma once

#include <cmath>

#include "axicrit/elliptic.hpp"
#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"

namespace axicrit {

/// Prognostic pair (Gamma, omega^theta) plus the cached diagnostic fields
/// (psi^theta, v^r, v^z, v^theta) kept consistent by refresh_derived.
struct FlowState {
    double time = 0.0;
    ScalarField gamma;       // r v^theta, ~ a(z) r^2 near the axis
    ScalarField omega_theta; // angular vorticity, odd
    ScalarField psi_theta;   // streamfunction, odd, cached
    ScalarField v_r, v_z, v_theta;

    FlowState() = default;
    explicit FlowState(const Grid& g)
        : gamma(g, AxisParity::even, OuterBc::dirichlet_zero),
          omega_theta(g, AxisParity::odd, OuterBc::dirichlet_zero),
          psi_theta(g, AxisParity::odd, OuterBc::dirichlet_zero),
          v_r(g, AxisParity::odd, OuterBc::dirichlet_zero),
          v_z(g, AxisParity::even, OuterBc::neumann_zero),
          v_theta(g, AxisParity::odd, OuterBc::dirichlet_zero) {}

    const Grid& grid() const { return *gamma.grid; }
};

/// Re-solve the streamfunction and rebuild the cached velocity fields from
/// the current (gamma, omega_theta).
inline void refresh_derived(FlowState& s, const StreamSolver& solver) {
    const Grid& g = s.grid();
    s.psi_theta = solver.solve_stream(s.omega_theta);
    auto [vr, vz] = velocity_from_stream(s.psi_theta);
    s.v_r = std::move(vr);
    s.v_z = std::move(vz);
    for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.nr; ++j)
            s.v_theta.at(j, k) = s.gamma.at(j, k) / g.r(j);
}

/// Kinetic energy ||v||^2 = ||v^r||^2 + ||v^theta||^2 + ||v^z||^2 in the
/// weighted measure (no 2*pi factor).
inline double kinetic_energy(const FlowState& s) {
    const Grid& g = s.grid();
    double total = 0.0;
    for (int k = 0; k < g.nz; ++k) {
        double row = 0.0;
        for (int j = 0; j < g.nr; ++j) {
            const double a = s.v_r.at(j, k);
            const double b = s.v_theta.at(j, k);
            const double c = s.v_z.at(j, k);
            row += (a * a + b * b + c * c) * g.r(j);
        }
        total += row;
    }
    return total * g.dr * g.dz;
}

/// ||grad v||^2, the dissipation functional of the energy identity.
inline double gradient_sq_total(const FlowState& s) {
    ScalarField dens = gradient_sq_density(s.v_r, s.v_theta, s.v_z);
    return quadrature(s.grid(), dens);
}

} // namespace axicrit
