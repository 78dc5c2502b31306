#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace arbfn {

/// Monte-Carlo estimate with its standard error (sample sd / sqrt(N)).
struct EstimateWithError {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t replicates = 0;
};

/// Complex-valued estimate, real and imaginary parts reported separately.
struct ComplexEstimate {
    EstimateWithError real_part;
    EstimateWithError imag_part;
};

/// Fixed-shape pairwise tree sum. The tree depends only on the length,
/// never on how the buffer was produced, so results are identical for
/// any worker count that filled the slots.
double pairwise_sum(std::span<const double> values);

/// Mean and standard error. Requires at least 2 samples.
EstimateWithError mean_with_se(std::span<const double> samples);

ComplexEstimate mean_with_se_complex(std::span<const std::complex<double>> samples);

/// Unbiased sample covariance. Requires equal nonempty lengths.
double covariance(std::span<const double> x, std::span<const double> y);

/// Covariance estimate with a delta-method standard error.
EstimateWithError covariance_with_se(std::span<const double> x, std::span<const double> y);

/// Sample variance estimate with a delta-method standard error
/// (se^2 = (m4 - m2^2)/N with central moments m2, m4).
EstimateWithError variance_with_se(std::span<const double> samples);

/// Sup distance between the ECDF of `samples` and `reference_cdf`.
/// The reference must be a nondecreasing function into [0,1].
double ks_distance(std::span<const double> samples, const std::function<double(double)>& reference_cdf);

/// Empirical characteristic function (1/N) sum exp(i <u, X_k>).
/// `samples` holds N points of dimension dim, flattened row-major.
std::complex<double> empirical_cf(std::span<const double> samples, int dim, std::span<const double> u);

/// Scalar convenience overload.
std::complex<double> empirical_cf(std::span<const double> samples, double u);

/// Runs fn(replicate) for replicate in [0, count) over `threads` workers,
/// each on a contiguous range. fn must only write to replicate-indexed
/// slots; combined with pairwise_sum this keeps every aggregate
/// bit-identical for any worker count.
void parallel_replicates(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Default worker count: the value set below, else hardware concurrency.
unsigned default_threads();

/// Process-wide worker override (0 restores the hardware default).
/// Results never depend on this; only wall time does.
void set_worker_threads(unsigned n);

}  // namespace arbfn
