#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "arbfn/rng.hpp"

namespace arbfn {

/// A sampleable scalar law. Optional fields are null when the law does not
/// provide them: density p(y), score rho(y) = (log p)'(y), exact
/// characteristic function, and cdf. The score is the rho of the
/// symmetric-bias formulas; laws whose distributional density derivative
/// is not of the form rho * P_Y ship without one.
struct DistributionSpec {
    std::string name;
    std::function<double(RandomStream&)> sampler;
    std::function<double(double)> density;                    // may be null
    std::function<double(double)> score;                      // may be null
    std::function<std::complex<double>(double)> cf;           // may be null
    std::function<double(double)> cdf;                        // may be null
    bool absolutely_continuous = false;

    double sample(RandomStream& stream) const { return sampler(stream); }
};

DistributionSpec normal_dist(double mu = 0.0, double sigma = 1.0);
DistributionSpec uniform_dist(double a, double b);
DistributionSpec exponential_dist(double lambda);
/// Uniform on the lattice {0, 1/m, ..., (m-1)/m}.
DistributionSpec lattice_dist(int m);
/// Convex mixture; weights are normalized internally.
DistributionSpec mixture_dist(std::vector<DistributionSpec> components, std::vector<double> weights);
/// Cantor-type singular law: random binary digits placed on skipped
/// ternary scales, X = sum 2 b_j 3^-j. Singular and non-Rajchman.
DistributionSpec cantor_dist();
/// Degenerate mass at c.
DistributionSpec point_mass(double c);

/// Catalog lookup by name: normal, uniform, exponential, lattice10,
/// mixture, cantor. Throws on unknown names.
DistributionSpec make_distribution(const std::string& name);

std::vector<std::string> distribution_catalog();

/// Draw `count` i.i.d. samples. count must be >= 1.
std::vector<double> sample(const DistributionSpec& dist, RandomStream& stream, std::size_t count);

}  // namespace arbfn
