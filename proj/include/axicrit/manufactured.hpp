#pragma once

// Generated by scripts/generate_manufactured.py -- do not edit by hand.

#include <cmath>

namespace axicrit {

/// Exact time-dependent fields plus the matching source terms for the
/// convergence fixture. `amp` scales both the meridional and swirl parts;
/// R and L are the domain extents; nu the viscosity.
struct ManufacturedSolution {
    double R = 1.0;
    double L = 1.0;
    double nu = 1.0;
    double amp = 1.0;

    double psi(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        return amp*r*std::pow((R * R) - (r * r), 4)*std::sin(2*M_PI*z/L)*std::cos((13.0/10.0)*t)/std::pow(R, 8);
    }

    double gamma(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = (r * r);
        return (1.0/10.0)*amp*x0*std::pow((R * R) - x0, 3)*(2*std::sin((21.0/10.0)*t) + 5)*(std::sin(7.0/10.0 + 2*M_PI*z/L) + 2)/std::pow(R, 8);
    }

    double omega_theta(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = std::pow(L, 2);
        const double x1 = (R * R);
        const double x2 = (r * r);
        const double x3 = x1 - x2;
        const double x4 = std::pow(x3, 2);
        return 4*amp*r*x4*(2*x0*x3 + 6*x0*(x1 - 3*x2) + std::pow(M_PI, 2)*x4)*std::sin(2*M_PI*z/L)*std::cos((13.0/10.0)*t)/(std::pow(R, 8)*x0);
    }

    double v_r(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = 2*M_PI/L;
        return -amp*r*x0*std::pow((R * R) - (r * r), 4)*std::cos((13.0/10.0)*t)*std::cos(x0*z)/std::pow(R, 8);
    }

    double v_z(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = (R * R);
        const double x1 = (r * r);
        return 2*amp*(x0 - 5*x1)*std::pow(x0 - x1, 3)*std::sin(2*M_PI*z/L)*std::cos((13.0/10.0)*t)/std::pow(R, 8);
    }

    double v_theta(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        return (1.0/10.0)*amp*r*std::pow((R * R) - (r * r), 3)*(2*std::sin((21.0/10.0)*t) + 5)*(std::sin(7.0/10.0 + 2*M_PI*z/L) + 2)/std::pow(R, 8);
    }

    double force_gamma(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = std::pow(L, 2);
        const double x1 = (R * R);
        const double x2 = (r * r);
        const double x3 = x1 - x2;
        const double x4 = std::pow(R, 8);
        const double x5 = (21.0/10.0)*t;
        const double x6 = M_PI*z/L;
        const double x7 = 2*x6;
        const double x8 = std::sin(x7 + 7.0/10.0);
        const double x9 = x8 + 2;
        const double x10 = x0*x9;
        const double x11 = std::pow(x3, 2);
        const double x12 = x11*x2;
        const double x13 = x1 - 5*x2;
        const double x14 = x1 - 4*x2;
        const double x15 = 20*std::sin(x5) + 50;
        return (1.0/50.0)*amp*x3*(M_PI*L*amp*x15*x2*std::pow(x3, 5)*(x13*(std::sin(4*x6 + 7.0/10.0) - std::sin(7.0/10.0)) - 2*x14*x9*std::cos(x7))*std::cos((13.0/10.0)*t) + nu*x15*x4*(x10*x14*x3 + x10*(-x11 + 3*x13*x2 + 12*x2*x3) + 2*std::pow(M_PI, 2)*x12*x8) + 21*x10*x12*x4*std::cos(x5))/(std::pow(R, 16)*x0);
    }

    double force_omega(double r, double z, double t) const {
        (void)r; (void)z; (void)t;
        const double x0 = std::pow(L, 4);
        const double x1 = (r * r);
        const double x2 = (R * R);
        const double x3 = -x1 + x2;
        const double x4 = std::pow(x3, 3);
        const double x5 = (13.0/10.0)*t;
        const double x6 = 2*M_PI*z/L;
        const double x7 = std::sin(x6);
        const double x8 = std::pow(R, 8)*x7;
        const double x9 = x8*std::sin(x5);
        const double x10 = x0*x9;
        const double x11 = std::pow(L, 2);
        const double x12 = std::pow(M_PI, 2);
        const double x13 = x1*x12;
        const double x14 = std::pow(x3, 2);
        const double x15 = -3*x1 + x2;
        const double x16 = x1*x15;
        const double x17 = x6 + 7.0/10.0;
        const double x18 = M_PI*amp*x1;
        const double x19 = x18*std::pow(x3, 6);
        const double x20 = 6*x11;
        const double x21 = x15*x20;
        const double x22 = 2*x11;
        const double x23 = x22*x3;
        const double x24 = x12*x14;
        const double x25 = x21 + x23 + x24;
        const double x26 = std::cos(x5);
        const double x27 = std::pow(x26, 2);
        const double x28 = std::cos(x6);
        const double x29 = 200*L*x27*x28*x7;
        const double x30 = x18*std::pow(x3, 5);
        const double x31 = -9*x1 + x2;
        const double x32 = 18*x1;
        const double x33 = 3*x3;
        const double x34 = -x15*x33;
        const double x35 = x14 + 12*x16 + x3*x32 + x34;
        const double x36 = 4*x14;
        const double x37 = -x15;
        const double x38 = 24*x1;
        return -1.0/25.0*amp*(std::pow(L, 3)*x19*std::pow(2*std::sin((21.0/10.0)*t) + 5, 2)*(std::sin(x17) + 2)*std::cos(x17) - 400*L*x25*x27*x28*x30*x7*(-5*x1 + x2) - 100*nu*x26*x8*(x11*x14*x25 - x11*(4*x11*x3*(12*std::pow(r, 4) + 2*x14 - x3*x32 + x33*x37) + x11*x38*(12*x1*x3 + 2*x16 + x34 - x36) + x12*x31*x4 - x14*x20*x37 + x22*x4 - x23*x35 + x24*x37*x38) + x13*x25*x36) + 260*x1*x10*x4 + 780*x10*x14*x16 + 130*x11*x13*std::pow(x3, 4)*x9 - x19*x25*x29 - x29*x30*(2*x11*x14 + 2*x11*x35 - x21*x3 - x24*x31))/(std::pow(R, 16)*r*x0);
    }
};

} // namespace axicrit
