#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "axicrit/errors.hpp"

namespace axicrit {

/// Staggered mesh on the half-plane rectangle [0, r_max] x [0, z_len).
///
/// Radial cell centers sit at r_j = (j + 1/2) dr, so every sample point has
/// r > 0 and the 1/r, 1/r^2, |ln r| weights stay finite. The z direction is
/// periodic with nodes z_k = k dz. Quadrature against the measure r dr dz is
/// the midpoint rule; the weights sum to r_max^2 z_len / 2 exactly.
struct Grid {
    int nr = 0;
    int nz = 0;
    double r_max = 0.0;
    double z_len = 0.0;
    double dr = 0.0;
    double dz = 0.0;
    std::vector<double> rc; // cell-center radii, rc[j] = (j + 1/2) dr

    double r(int j) const { return rc[static_cast<std::size_t>(j)]; }
    double z(int k) const { return dz * k; }
    /// Face radius left of cell j (faces at j*dr; face 0 is the axis).
    double r_face(int j) const { return dr * j; }

    std::size_t cells() const { return static_cast<std::size_t>(nr) * nz; }
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(k) * nr + j; }

    /// Quadrature weight of cell (j,k) for the measure r dr dz.
    double weight(int j) const { return rc[static_cast<std::size_t>(j)] * dr * dz; }
    double weight_sum() const { return 0.5 * r_max * r_max * z_len; }

    bool same_shape(const Grid& other) const {
        return nr == other.nr && nz == other.nz &&
               r_max == other.r_max && z_len == other.z_len;
    }
};

inline Grid build_grid(int nr, int nz, double r_max, double z_len) {
    if (nr < 4 || nz < 4)
        throw ConfigError("grid: nr and nz must be >= 4 (got nr=" +
                          std::to_string(nr) + ", nz=" + std::to_string(nz) + ")");
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        throw ConfigError("grid: r_max must be positive and finite");
    if (!(z_len > 0.0) || !std::isfinite(z_len))
        throw ConfigError("grid: z_len must be positive and finite");

    Grid g;
    g.nr = nr;
    g.nz = nz;
    g.r_max = r_max;
    g.z_len = z_len;
    g.dr = r_max / nr;
    g.dz = z_len / nz;
    g.rc.resize(static_cast<std::size_t>(nr));
    for (int j = 0; j < nr; ++j)
        g.rc[static_cast<std::size_t>(j)] = (j + 0.5) * g.dr;
    return g;
}

} // namespace axicrit
