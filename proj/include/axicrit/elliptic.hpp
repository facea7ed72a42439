#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <fftw3.h>

#include "axicrit/diffops.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"

namespace axicrit {

/// Direct solver for -(Delta - 1/r^2) psi = omega with psi = 0 at r = r_max
/// and odd axis parity: DFT in the periodic z direction, then one symmetric
/// tridiagonal solve per mode. The radial matrix is exactly the
/// laplacian_minus_inv_r2 stencil and the mode shift is exactly the
/// eigenvalue of the periodic second difference, so applying the real-space
/// operator to the solution reproduces -omega to roundoff.
class StreamSolver {
public:
    explicit StreamSolver(const Grid& g) : grid_(&g) {
        const int nr = g.nr, nz = g.nz;
        nmodes_ = nz / 2 + 1;

        lower_.assign(nr, 0.0);
        upper_.assign(nr, 0.0);
        diag_.assign(nr, 0.0);
        const double dr2 = g.dr * g.dr;
        for (int j = 0; j < nr; ++j) {
            if (j == 0) {
                diag_[0] = stencil::mi_axis_diag(g.dr);
                upper_[0] = stencil::mi_axis_upper(g.dr);
                continue;
            }
            upper_[j] = j + 1 < nr ? g.r(j + 1) / (dr2 * g.r_face(j + 1)) : 0.0;
            lower_[j] = g.r(j - 1) / (dr2 * g.r_face(j));
            double d = -g.r(j) / (dr2 * g.r_face(j));
            if (j + 1 < nr)
                d -= g.r(j) / (dr2 * g.r_face(j + 1));
            else
                d -= 2.0 / dr2; // Dirichlet face at r_max
            diag_[j] = d;
        }

        // Thomas factors per z mode; the shift is the discrete symbol of the
        // periodic second difference.
        cp_.assign(static_cast<std::size_t>(nmodes_) * nr, 0.0);
        invden_.assign(static_cast<std::size_t>(nmodes_) * nr, 0.0);
        for (int m = 0; m < nmodes_; ++m) {
            const double s = std::sin(M_PI * m / nz);
            const double km2 = 4.0 * s * s / (g.dz * g.dz);
            double* cp = &cp_[static_cast<std::size_t>(m) * nr];
            double* iv = &invden_[static_cast<std::size_t>(m) * nr];
            double den = diag_[0] - km2;
            if (den == 0.0) throw InternalError("StreamSolver: singular pivot");
            iv[0] = 1.0 / den;
            cp[0] = upper_[0] * iv[0];
            for (int j = 1; j < nr; ++j) {
                den = (diag_[j] - km2) - lower_[j] * cp[j - 1];
                if (den == 0.0) throw InternalError("StreamSolver: singular pivot");
                iv[j] = 1.0 / den;
                if (j + 1 < nr) cp[j] = upper_[j] * iv[j];
            }
        }

        real_buf_ = fftw_alloc_real(g.cells());
        cplx_buf_ = fftw_alloc_complex(static_cast<std::size_t>(nmodes_) * nr);
        const int n[1] = {nz};
        fwd_ = fftw_plan_many_dft_r2c(1, n, nr, real_buf_, nullptr, nr, 1,
                                      cplx_buf_, nullptr, nr, 1, FFTW_ESTIMATE);
        bwd_ = fftw_plan_many_dft_c2r(1, n, nr, cplx_buf_, nullptr, nr, 1,
                                      real_buf_, nullptr, nr, 1, FFTW_ESTIMATE);
        if (fwd_ == nullptr || bwd_ == nullptr)
            throw InternalError("StreamSolver: FFTW planning failed");
    }

    ~StreamSolver() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(real_buf_);
        fftw_free(cplx_buf_);
    }

    StreamSolver(const StreamSolver&) = delete;
    StreamSolver& operator=(const StreamSolver&) = delete;

    const Grid& grid() const { return *grid_; }

    ScalarField solve_stream(const ScalarField& omega_theta) const {
        const Grid& g = *grid_;
        require_same_grid(g, omega_theta, "solve_stream");
        const int nr = g.nr;

        for (std::size_t i = 0; i < g.cells(); ++i)
            real_buf_[i] = -omega_theta.v[i];
        fftw_execute(fwd_);

        // Thomas sweep per mode, real and imaginary parts share the factors.
        for (int m = 0; m < nmodes_; ++m) {
            fftw_complex* x = cplx_buf_ + static_cast<std::size_t>(m) * nr;
            const double* cp = &cp_[static_cast<std::size_t>(m) * nr];
            const double* iv = &invden_[static_cast<std::size_t>(m) * nr];
            x[0][0] *= iv[0];
            x[0][1] *= iv[0];
            for (int j = 1; j < nr; ++j) {
                x[j][0] = (x[j][0] - lower_[j] * x[j - 1][0]) * iv[j];
                x[j][1] = (x[j][1] - lower_[j] * x[j - 1][1]) * iv[j];
            }
            for (int j = nr - 2; j >= 0; --j) {
                x[j][0] -= cp[j] * x[j + 1][0];
                x[j][1] -= cp[j] * x[j + 1][1];
            }
        }

        fftw_execute(bwd_);
        ScalarField psi(g, AxisParity::odd, OuterBc::dirichlet_zero);
        const double scale = 1.0 / g.nz;
        for (std::size_t i = 0; i < g.cells(); ++i)
            psi.v[i] = real_buf_[i] * scale;
        return psi;
    }

private:
    const Grid* grid_;
    int nmodes_;
    std::vector<double> lower_, upper_, diag_;
    std::vector<double> cp_, invden_;
    double* real_buf_ = nullptr;
    fftw_complex* cplx_buf_ = nullptr;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

/// v^r = -d_z psi, v^z = (1/r) d_r(r psi) with signed ghost radii. The v^z
/// stencil telescopes against the divergence stencil, so the reconstructed
/// meridional field is divergence-free to roundoff.
inline std::pair<ScalarField, ScalarField> velocity_from_stream(const ScalarField& psi) {
    const Grid& g = *psi.grid;
    ScalarField vr = d_z(psi);
    for (double& x : vr.v) x = -x;
    vr.parity = AxisParity::odd;
    vr.outer = OuterBc::dirichlet_zero;

    ScalarField vz(g, AxisParity::even, OuterBc::neumann_zero);
    const double r_ghost = g.r_max + 0.5 * g.dr;
    for (int k = 0; k < g.nz; ++k) {
        for (int j = 0; j < g.nr; ++j) {
            const double rp = j + 1 < g.nr ? g.r(j + 1) : r_ghost;
            const double rm = j > 0 ? g.r(j - 1) : -g.r(0);
            vz.at(j, k) = (rp * psi.gval(j + 1, k) - rm * psi.gval(j - 1, k)) /
                          (2.0 * g.dr * g.r(j));
        }
    }
    return {std::move(vr), std::move(vz)};
}

} // namespace axicrit
