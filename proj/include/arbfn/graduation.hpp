#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "arbfn/distributions.hpp"
#include "arbfn/rng.hpp"
#include "arbfn/stats.hpp"
#include "arbfn/test_functions.hpp"

namespace arbfn {

/// Fractional part, in [0, 1); x - frac(x) is an integer.
double frac(double x);

/// theta(x) = 1/2 - frac(x), in (-1/2, 1/2]. The scaled graduation error:
/// rounding y to the nearest mark of the 1/n grid moves it by theta(ny)/n.
double theta(double x);

enum class GraduationKind {
    nearest,  // ([ny] + 1/2)/n
    down,     // [ny]/n (rounding by default)
    up,       // ceil(ny)/n (rounding by excess)
    general,  // y + displacement(y, n)
};

struct GraduationMap {
    GraduationKind kind = GraduationKind::nearest;
    std::function<double(double, int)> displacement;  // general maps only

    static GraduationMap nearest() { return {GraduationKind::nearest, nullptr}; }
    static GraduationMap down() { return {GraduationKind::down, nullptr}; }
    static GraduationMap up() { return {GraduationKind::up, nullptr}; }
    static GraduationMap general(std::function<double(double, int)> xi) {
        return {GraduationKind::general, std::move(xi)};
    }
};

/// Rounds y onto the 1/n grid according to the map. n must be >= 1.
double graduate(double y, int n, const GraduationMap& map = GraduationMap::nearest());

/// Componentwise graduation of a point.
std::vector<double> graduate(std::span<const double> y, int n,
                             const GraduationMap& map = GraduationMap::nearest());

/// Samples of n(Y_n - Y) = theta(nY) for the nearest map.
std::vector<double> scaled_error_samples(const DistributionSpec& dist, int n,
                                         std::size_t count, RandomStream stream);

enum class BiasKind { theoretical, practical, symmetric, singular, gamma };

/// The four rescaled increment brackets at fixed n, estimated with common
/// random numbers from one sample set. Raw per-replicate brackets satisfy
/// h4 = h1 - h2 and h3 = -(h1 + h2) algebraically; max_identity_defect
/// reports the worst floating-point deviation seen.
///
/// With variance_reduced set, the first-order oscillation term
/// alpha/n * phi'(Y) chi(Y) theta(nY) is subtracted from h1/h2/h4
/// (consistently, so the linear relations are preserved). Its mean vanishes
/// as n grows for smooth laws; without it the h1/h2/h4 estimators drown in
/// O(n) noise at alpha = n^2.
struct BiasBrackets {
    EstimateWithError h1, h2, h3, h4;
    double max_identity_defect = 0.0;
};

BiasBrackets bias_brackets(const TestFunction& phi, const TestFunction& chi,
                           const DistributionSpec& dist, int n, double alpha_n,
                           std::size_t count, RandomStream stream,
                           bool variance_reduced = true);

/// One bracket selected from bias_brackets (gamma uses its own kernel).
/// For the symmetric kind the raw limit -2 E[A~[phi] chi] is returned.
EstimateWithError bias_estimate(BiasKind kind, const TestFunction& phi, const TestFunction& chi,
                                const DistributionSpec& dist, int n, double alpha_n,
                                std::size_t count, RandomStream stream,
                                bool variance_reduced = true);

/// n^2 E[(phi(Y_n) - phi(Y))^2], to be compared with E[sum phi_i'^2]/12.
EstimateWithError gamma_estimate(const TestFunction& phi, const DistributionSpec& dist, int n,
                                 std::size_t count, RandomStream stream,
                                 const GraduationMap& map = GraduationMap::nearest());

/// Deterministic values n^2 (phi(y + theta(ny)/n) - phi(y)) on a grid.
std::vector<double> conditional_bias_curve(const TestFunction& phi, int n,
                                           std::span<const double> y_grid);

/// Pairs the conditional bias curve against chi by midpoint quadrature over
/// [lo, hi], with quadrature cells aligned to the 1/n graduation cells.
double conditional_bias_pairing(const TestFunction& phi, const TestFunction& chi, int n,
                                double lo, double hi, int points_per_cell = 32);

/// Per-replicate product-rule defect of the singular bracket,
/// est(phi psi, chi) - est(phi, psi chi) - est(psi, phi chi), at fixed n.
/// Vanishes as n grows when the form is local.
std::vector<double> first_order_defect_samples(const TestFunction& phi, const TestFunction& psi,
                                               const TestFunction& chi, const DistributionSpec& dist,
                                               int n, std::size_t count, RandomStream stream);

EstimateWithError first_order_check(const TestFunction& phi, const TestFunction& psi,
                                    const TestFunction& chi, const DistributionSpec& dist,
                                    int n, std::size_t count, RandomStream stream);

/// Measure-change invariance of the square field operator: returns the
/// weighted dynamic estimate n^2 E[f (phi(Y_n)-phi(Y))^2] and the static
/// estimate E[f phi'^2]/12 over the same samples; the weight is normalized
/// to unit mean internally and must be positive on the sampled set.
std::pair<EstimateWithError, EstimateWithError> girsanov_gamma_check(
    const TestFunction& phi, const TestFunction& weight, const DistributionSpec& dist,
    int n, std::size_t count, RandomStream stream);

/// Theoretical-bracket estimate alpha_n E[phi(Y + xi_n(Y)) - phi(Y)] under a
/// general displacement family.
EstimateWithError general_graduation_bias(const TestFunction& phi,
                                          const std::function<double(double, int)>& displacement,
                                          double alpha_n, const DistributionSpec& dist, int n,
                                          std::size_t count, RandomStream stream,
                                          bool variance_reduced = true);

/// Rounding by default at alpha_n = n: the shift estimate n E[Y_n - Y]
/// (limit -1/2) and the symmetric bracket at the same scaling (limit 0).
struct ShiftBias {
    EstimateWithError shift;
    EstimateWithError symmetric_at_n;
};

ShiftBias shift_bias_default(const DistributionSpec& dist, int n, std::size_t count,
                             RandomStream stream, const TestFunction& phi, const TestFunction& chi);

/// Locality diagnostic: n^2 E[(phi(Y_n)-phi(Y))^4], expected O(1/n^2).
EstimateWithError fourth_moment_scaled(const TestFunction& phi, const DistributionSpec& dist,
                                       int n, std::size_t count, RandomStream stream);

/// Gradient representation: E[(V phi'(Y))^2] - E[phi'(Y)^2]/12 with
/// V ~ U(-1/2,1/2) independent of Y; zero in expectation.
EstimateWithError gradient_representation_defect(const TestFunction& phi,
                                                 const DistributionSpec& dist,
                                                 std::size_t count, RandomStream stream);

}  // namespace arbfn
