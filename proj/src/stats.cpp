#include "arbfn/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace arbfn {

namespace {

double pairwise_sum_impl(const double* data, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

EstimateWithError mean_with_se(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw std::invalid_argument("mean_with_se: need at least 2 samples");
    const double mean = pairwise_sum(samples) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = samples[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

ComplexEstimate mean_with_se_complex(std::span<const std::complex<double>> samples) {
    const std::size_t n = samples.size();
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = samples[i].real();
        im[i] = samples[i].imag();
    }
    return {mean_with_se(re), mean_with_se(im)};
}

double covariance(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n == 0 || n != y.size()) throw std::invalid_argument("covariance: equal nonempty lengths required");
    if (n < 2) return 0.0;
    const double mx = pairwise_sum(x) / static_cast<double>(n);
    const double my = pairwise_sum(y) / static_cast<double>(n);
    std::vector<double> prod(n);
    for (std::size_t i = 0; i < n; ++i) prod[i] = (x[i] - mx) * (y[i] - my);
    return pairwise_sum(prod) / static_cast<double>(n - 1);
}

EstimateWithError covariance_with_se(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || n != y.size()) throw std::invalid_argument("covariance_with_se: equal lengths >= 2 required");
    const double mx = pairwise_sum(x) / static_cast<double>(n);
    const double my = pairwise_sum(y) / static_cast<double>(n);
    std::vector<double> prod(n);
    for (std::size_t i = 0; i < n; ++i) prod[i] = (x[i] - mx) * (y[i] - my);
    const double c = pairwise_sum(prod) / static_cast<double>(n - 1);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = prod[i] - c;
        sq[i] = d * d;
    }
    const double var_c = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {c, std::sqrt(var_c / static_cast<double>(n)), n};
}

EstimateWithError variance_with_se(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2) throw std::invalid_argument("variance_with_se: need at least 2 samples");
    const double mean = pairwise_sum(samples) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = samples[i] - mean;
        sq[i] = d * d;
    }
    const double m2 = pairwise_sum(sq) / static_cast<double>(n);
    std::vector<double> dev(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = sq[i] - m2;
        dev[i] = d * d;
    }
    const double m4_minus_m2sq = pairwise_sum(dev) / static_cast<double>(n);
    const double unbiased = m2 * static_cast<double>(n) / static_cast<double>(n - 1);
    return {unbiased, std::sqrt(std::max(m4_minus_m2sq, 0.0) / static_cast<double>(n)), n};
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& reference_cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = reference_cdf(sorted[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

std::complex<double> empirical_cf(std::span<const double> samples, int dim, std::span<const double> u) {
    if (samples.empty()) throw std::invalid_argument("empirical_cf: empty sample");
    if (dim < 1 || static_cast<std::size_t>(dim) != u.size() || samples.size() % dim != 0)
        throw std::invalid_argument("empirical_cf: dimension mismatch");
    const std::size_t n = samples.size() / dim;
    std::vector<double> re(n), im(n);
    for (std::size_t k = 0; k < n; ++k) {
        double phase = 0.0;
        for (int j = 0; j < dim; ++j) phase += u[j] * samples[k * dim + j];
        re[k] = std::cos(phase);
        im[k] = std::sin(phase);
    }
    return {pairwise_sum(re) / static_cast<double>(n), pairwise_sum(im) / static_cast<double>(n)};
}

std::complex<double> empirical_cf(std::span<const double> samples, double u) {
    return empirical_cf(samples, 1, std::span<const double>(&u, 1));
}

namespace {
std::atomic<unsigned> g_worker_threads{0};
}

void set_worker_threads(unsigned n) { g_worker_threads.store(n); }

unsigned default_threads() {
    const unsigned set = g_worker_threads.load();
    if (set != 0) return set;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

void parallel_replicates(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2 * threads) {
        for (std::size_t r = 0; r < count; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] {
            for (std::size_t r = lo; r < hi; ++r) fn(r);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace arbfn
