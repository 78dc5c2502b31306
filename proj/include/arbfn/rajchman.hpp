#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "arbfn/distributions.hpp"
#include "arbfn/rng.hpp"
#include "arbfn/stats.hpp"

namespace arbfn {

/// |Psi_X(u)| along a frequency ladder. Source records whether the moduli
/// came from a closed-form characteristic function or from samples; the
/// empirical route carries Monte-Carlo error bars.
struct CfDecayProfile {
    enum class Source { exact_formula, empirical };
    Source source = Source::empirical;
    std::vector<double> frequencies;
    std::vector<double> moduli;
    std::vector<double> std_errors;  // zero for the exact route
};

/// Computes the decay profile over positive increasing frequencies.
/// Uses the law's exact characteristic function when present unless
/// force_empirical is set.
CfDecayProfile cf_decay_profile(const DistributionSpec& dist, std::span<const double> frequencies,
                                std::size_t count, RandomStream stream,
                                bool force_empirical = false);

enum class RajchmanVerdict { decaying, persistent, inconclusive };

/// Heuristic verdict over the tail window (frequencies above half the
/// ladder maximum): persistent if any tail modulus exceeds 1 - threshold,
/// decaying if the tail stays below threshold and below the head maximum,
/// inconclusive otherwise (including an empty tail). A diagnostic, not a
/// proof.
RajchmanVerdict classify_rajchman(const CfDecayProfile& profile, double threshold);

std::string to_string(RajchmanVerdict v);

/// Joint diagnostics for the limit of ({nX+Y}, X): uniformity of the
/// fractional part and factorization of the joint characteristic function
/// over a small (k, zeta) grid.
struct JointCfCell {
    int k = 0;
    double zeta = 0.0;
    std::complex<double> joint;
    double joint_se = 0.0;  // combined bound from the real/imag errors
    std::complex<double> marginal_product;
    double product_se = 0.0;
};

struct ArbitraryFunctionsReport {
    double ks_uniform = 0.0;  // ECDF of {nX+Y} against U(0,1)
    std::size_t replicates = 0;
    std::vector<JointCfCell> cells;
};

ArbitraryFunctionsReport arbitrary_functions_test(const DistributionSpec& x_dist,
                                                  const DistributionSpec& y_dist, int n,
                                                  std::size_t count, RandomStream stream,
                                                  std::span<const int> k_grid,
                                                  std::span<const double> zeta_grid);

}  // namespace arbfn
