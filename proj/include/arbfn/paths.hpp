#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "arbfn/rng.hpp"
#include "arbfn/stats.hpp"

namespace arbfn {

/// Scalar path on the uniform grid t_k = k * horizon / m, values[0] = origin.
struct GridPath {
    double horizon = 1.0;
    std::vector<double> values;  // m + 1 entries

    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
    double dt() const { return horizon / static_cast<double>(steps()); }
    double front() const { return values.front(); }
    double back() const { return values.back(); }
};

/// Brownian path with independent N(0, dt) increments.
GridPath brownian_path(std::size_t m, RandomStream& stream, double horizon = 1.0);

/// Brownian grid skeleton carrying, per step, the time integral of the
/// in-step bridge: step_areas[j] = int over [t_j, t_{j+1}] of (B_s - B_{t_j}) ds,
/// drawn from its exact conditional law N(dt * dB / 2, dt^3 / 12). These make
/// the grid statistics below exact in law rather than O(1/m)-biased.
struct BrownianSkeleton {
    GridPath path;
    std::vector<double> step_areas;
};

BrownianSkeleton brownian_skeleton(std::size_t m, RandomStream& stream);

/// Left-point Ito sums: values[k] = sum_{j<k} integrand[j] dB_j.
GridPath ito_sum(std::span<const double> integrand, const GridPath& path);

/// Increasing absolutely continuous clock a : [0,1] -> [0, a(1)], a(0) = 0.
struct TimeChangeClock {
    std::function<double(double)> a;
};

/// M_t = B_{a(t)} by linear interpolation on the base grid; the output grid
/// has the same number of steps over [0, 1]. Throws if the clock leaves the
/// base horizon or decreases on the grid.
GridPath time_changed_path(const GridPath& base, const TimeChangeClock& clock);

/// Bounded Riemann-integrable periodic function with unit period, together
/// with its exact mean and L2 norm over one period.
struct OscillatorSpec {
    std::string name;
    std::function<double(double)> f;
    double mean = 0.0;
    double l2norm2 = 0.0;
    double sup_norm = 0.0;
};

/// f(x) = 1/2 - {x}: mean 0, int f^2 = 1/12.
OscillatorSpec osc_sawtooth();
/// sqrt(12) (1/2 - {x}): mean 0, int f^2 = 1 (the normalized convention).
OscillatorSpec osc_unit_sawtooth();
/// f(x) = {x}: mean 1/2, int f^2 = 1/3.
OscillatorSpec osc_frac();

/// Max deviation of the stored mean / l2norm2 from composite midpoint
/// quadrature at `nodes` points.
double oscillator_moment_defect(const OscillatorSpec& osc, int nodes = 100000);

/// Path of int_0^t f(ns) dM_s by left-point sums, f sampled at the fine-step
/// midpoints. Requires m >= 16 n so the oscillation is resolved.
GridPath oscillating_integral(const OscillatorSpec& osc, int n, const GridPath& martingale);

/// Deterministic sup_t |int_0^t f(ns) ds| on the fine midpoint grid.
double oscillating_primitive_sup(const OscillatorSpec& osc, int n, std::size_t m);

/// One replicate of the coupled grid statistics of the Euler-scheme error
/// integrals, with f(x) = 1/2 - {x}:
///   p1 = n int (s - [ns]/n - 1/(2n)) dB      (limit W/sqrt(12))
///   p2 = n int (s - [ns]/n) dB               (limit W/sqrt(12) + B/2)
///   p3 = n int (B_s - B_{[ns]/n}) ds         (limit -W/sqrt(12) + B/2)
///   p4 = sqrt(n) int (B_s - B_{[ns]/n}) dB   (limit W~/sqrt(2))
/// Each integral is evaluated exactly on the skeleton (deterministic
/// in-step corrections plus the bridge areas), so p2 + p3 = B holds
/// pathwise at every graduation node and the moments carry no grid bias.
struct KurtzProtterSample {
    double p1_half, p1_one;
    double p2_half, p2_one;
    double p3_half, p3_one;
    double p4_half, p4_one;
    double b_half, b_one;
};

/// Requires m a multiple of n and n even (so t = 1/2 is a graduation node).
KurtzProtterSample kurtz_protter_sample(int n, std::size_t m, RandomStream& stream);

/// n^2 E[(e^{i int eta dM^n} - e^{i int eta dM})(e^{i int zeta dM^n} - e^{i int zeta dM})]
/// at fixed n, with M^n = M + (1/n) int f(ns) dM. Integrands are bounded
/// deterministic functions sampled at the left gridpoints. The optional
/// clock time-changes the driving Brownian motion.
ComplexEstimate theorem6_bracket(const std::function<double(double)>& eta,
                                 const std::function<double(double)>& zeta,
                                 const OscillatorSpec& osc, int n, std::size_t m,
                                 std::size_t count, RandomStream stream,
                                 const TimeChangeClock* clock = nullptr);

/// Special case eta = zeta = xi on the Wiener space.
ComplexEstimate theorem7_cf_form(const std::function<double(double)>& xi,
                                 const OscillatorSpec& osc, int n, std::size_t m,
                                 std::size_t count, RandomStream stream);

}  // namespace arbfn
