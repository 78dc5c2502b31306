#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arbfn/paths.hpp"
#include "arbfn/rng.hpp"

namespace arbfn {

/// Mechanical SDE block structure (scalar case):
///   dX1 = f11(X2) dB + f12(X1, X2) ds
///   dX2 = f22(X1, X2) ds
/// The noise coefficient depends on X2 only and X2 carries no noise; this
/// is what keeps the Euler error at the 1/n scale. A non-null f21 marks a
/// system outside the class (X2 driven by dB) and is rejected by the
/// experiment layer: such systems live in the sqrt(n) central-limit regime.
struct SdeSystem {
    std::string name;
    double x10 = 0.0, x20 = 0.0;
    std::function<double(double)> f11, d_f11;                  // of x2
    std::function<double(double, double)> f12, d1_f12, d2_f12; // of (x1, x2)
    std::function<double(double, double)> f22, d1_f22, d2_f22;
    std::function<double(double, double)> f21;                 // null inside the class
};

SdeSystem sde_constant();
SdeSystem sde_linear();
/// Velocity/position pair dX = V dt, dV = (-sin X - 0.1 V) dt + sigma/(1+X^2) dB,
/// mapped to the block structure with X1 = V, X2 = X.
SdeSystem sde_pendulum(double sigma = 0.5);
/// A system with X2 noise (f21 != 0); outside the class, kept for the
/// rejection path.
SdeSystem sde_full_coupling();

SdeSystem make_system(const std::string& name);
std::vector<std::string> system_catalog();

bool block_structure_ok(const SdeSystem& sys);

struct PathPair {
    GridPath x1, x2;
};

/// Explicit Euler on the coarse n-grid using the coarse increments of the
/// fine driving path, linearly interpolated back to the fine grid.
/// driving.steps() must be a multiple of n. Throws on non-finite
/// coefficients (diagnosed overflow).
PathPair euler_solve(const SdeSystem& sys, std::size_t n, const GridPath& driving);

/// Proxy for the exact solution: Euler on the full fine grid of the same
/// driving path (coupled noise).
PathPair reference_solve(const SdeSystem& sys, const GridPath& driving);

/// n (X^n - X_ref), componentwise on the fine grid.
PathPair scaled_error(std::size_t n, const PathPair& coarse, const PathPair& reference);

/// Euler solve of the linear limit equation for the rescaled error, driven
/// by the Z-processes dZ12 = dW/sqrt(12) + dB/2, dZ21 = -dW/sqrt(12) + dB/2,
/// dZ22 = ds/2 along the reference path. W must be independent of B and on
/// the same grid.
PathPair limit_sde_solve(const SdeSystem& sys, const PathPair& reference, const GridPath& b,
                         const GridPath& w);

}  // namespace arbfn
