#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "arbfn/paths.hpp"
#include "arbfn/rng.hpp"
#include "arbfn/stats.hpp"

namespace arbfn {

/// Order-k element of the discrete Wiener chaos with a product-form kernel
/// on the simplex: f(s_1 < ... < s_k) = prod_p cell[j(s_p)], piecewise
/// constant on the m-grid. Product kernels keep every computation O(k m)
/// through running-sum recursions, including the exact norm
///   norm2 = sum over the simplex of |f|^2 / m^k.
struct ChaosElement {
    int order = 1;
    std::vector<std::complex<double>> cell;  // m per-cell factors
    double norm2 = 0.0;

    std::size_t grid_steps() const { return cell.size(); }
};

/// Constant kernel f = scale; order 1 <= k <= 3.
ChaosElement make_chaos_constant(int k, std::size_t m, double scale = 1.0);
/// General product kernel from per-cell factors.
ChaosElement make_chaos_product(int k, std::vector<std::complex<double>> cell_factors);

/// Exact discrete simplex norm^2 by the elementary-symmetric recursion.
double chaos_norm2(int k, std::span<const std::complex<double>> cell_factors);

/// Iterated left-point Ito sum over the simplex, O(k m) per path.
std::complex<double> eval_chaos(const ChaosElement& x, const GridPath& path);

/// R_n: each increment dB_{s_p} is weighted by e^{i theta(n s_p)/n}.
/// theta must be normalized (mean 0, L2 norm 1 over one period) and the
/// oscillation resolved (m >= 16 n).
std::complex<double> rn_transform(const ChaosElement& x, int n, const OscillatorSpec& theta_osc,
                                  const GridPath& path);

/// Sharp gradient X^# : the sum over slots p of the iterated integral with
/// dB at slot p replaced by dW, for an independent path W on the same grid.
std::complex<double> sharp_gradient(const ChaosElement& x, const GridPath& path_b,
                                    const GridPath& path_w);

/// Deterministic n^2 E|R_n(X) - X|^2 on the discrete simplex (no Monte
/// Carlo); converges to k ||X||^2 from below.
double theorem9_value(const ChaosElement& x, int n, const OscillatorSpec& theta_osc);

/// Limit target k ||X||^2 (the doubled Ornstein-Uhlenbeck energy of a
/// k-th chaos element).
double theorem9_target(const ChaosElement& x);

/// Quantitative domination: ||n(R_n X - X)||^2 <= k^2 ||X||^2 ||theta||_inf^2.
double rn_domination_bound(const ChaosElement& x, const OscillatorSpec& theta_osc);

/// Periodic map into 2x2 orthogonal matrices (row-major), unit period.
struct RotationSchedule {
    std::string name;
    std::function<std::array<double, 4>(double)> matrix;
};

/// Rotation by angle 2 pi s; its average over one period vanishes.
RotationSchedule rotation_full_turn();
/// Constant identity (degenerate; for the fixed-point check only).
RotationSchedule rotation_identity();

/// Max |M^T M - I| entry over sampled times.
double schedule_orthogonality_defect(const RotationSchedule& schedule, int samples = 1024);
/// Entrywise max |mean of M over one period| on the midpoint grid.
double schedule_mean_norm(const RotationSchedule& schedule, int samples = 1024);

struct RotationReport {
    double ks_vs_reference = 0.0;
    EstimateWithError cov_with_b1;
    std::size_t replicates = 0;
};

/// Applies d(B~) = M_{ns} dB to a 2-d Brownian motion, evaluates the
/// functional on the transformed pair, and reports the marginal KS against
/// reference_cdf plus the covariance with B^1_1.
RotationReport rotation_transform(
    const std::function<double(const GridPath&, const GridPath&)>& functional,
    const RotationSchedule& schedule, int n, std::size_t m, std::size_t count,
    RandomStream stream, const std::function<double(double)>& reference_cdf);

}  // namespace arbfn
