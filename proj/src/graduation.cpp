#include "arbfn/graduation.hpp"

#include <cmath>
#include <stdexcept>

namespace arbfn {

double frac(double x) {
    return x - std::floor(x);
}

double theta(double x) {
    return 0.5 - frac(x);
}

double graduate(double y, int n, const GraduationMap& map) {
    if (n < 1) throw std::invalid_argument("graduate: n must be >= 1");
    switch (map.kind) {
        case GraduationKind::nearest:
            return (std::floor(n * y) + 0.5) / n;
        case GraduationKind::down:
            return std::floor(n * y) / n;
        case GraduationKind::up:
            return std::ceil(n * y) / n;
        case GraduationKind::general:
            if (!map.displacement) throw std::invalid_argument("graduate: general map needs a displacement");
            return y + map.displacement(y, n);
    }
    throw std::logic_error("graduate: unreachable");
}

std::vector<double> graduate(std::span<const double> y, int n, const GraduationMap& map) {
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = graduate(y[i], n, map);
    return out;
}

namespace {

// Per-replicate evaluation buffers for an estimator over `count` replicates.
// Replicate r draws from derive_stream(base.seed, base.stream_id + r), so
// results do not depend on the worker count.
template <typename Fn>
std::vector<double> replicate_values(std::size_t count, const RandomStream& base, Fn&& fn) {
    std::vector<double> out(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(base.seed(), base.stream_id() + r);
        out[r] = fn(rs);
    });
    return out;
}

}  // namespace

std::vector<double> scaled_error_samples(const DistributionSpec& dist, int n,
                                         std::size_t count, RandomStream stream) {
    if (n < 1) throw std::invalid_argument("scaled_error_samples: n must be >= 1");
    return replicate_values(count, stream, [&](RandomStream& rs) {
        return theta(n * dist.sample(rs));
    });
}

BiasBrackets bias_brackets(const TestFunction& phi, const TestFunction& chi,
                           const DistributionSpec& dist, int n, double alpha_n,
                           std::size_t count, RandomStream stream, bool variance_reduced) {
    if (!(alpha_n > 0.0)) throw std::invalid_argument("bias_brackets: alpha_n must be > 0");
    std::vector<double> v1(count), v2(count), v3(count), v4(count), defect(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        const double y = dist.sample(rs);
        const double t = theta(n * y);
        const double yn = y + t / n;
        const double p = phi.f(y), pn = phi.f(yn);
        const double c = chi.f(y), cn = chi.f(yn);
        const double r1 = alpha_n * (pn - p) * c;
        const double r2 = alpha_n * (p - pn) * cn;
        const double r3 = alpha_n * (pn - p) * (cn - c);
        const double r4 = alpha_n * (pn - p) * (cn + c);
        const double scale = std::max({1.0, std::fabs(r1), std::fabs(r2)});
        defect[r] = std::max(std::fabs(r4 - (r1 - r2)), std::fabs(r3 + (r1 + r2))) / scale;
        const double cv = variance_reduced ? alpha_n / n * phi.df(y) * c * t : 0.0;
        v1[r] = r1 - cv;
        v2[r] = r2 + cv;
        v3[r] = r3;
        v4[r] = r4 - 2.0 * cv;
    });
    BiasBrackets out;
    out.h1 = mean_with_se(v1);
    out.h2 = mean_with_se(v2);
    out.h3 = mean_with_se(v3);
    out.h4 = mean_with_se(v4);
    double worst = 0.0;
    for (double d : defect) worst = std::max(worst, d);
    out.max_identity_defect = worst;
    return out;
}

EstimateWithError bias_estimate(BiasKind kind, const TestFunction& phi, const TestFunction& chi,
                                const DistributionSpec& dist, int n, double alpha_n,
                                std::size_t count, RandomStream stream, bool variance_reduced) {
    if (kind == BiasKind::gamma) {
        return gamma_estimate(phi, dist, n, count, stream);
    }
    const BiasBrackets b = bias_brackets(phi, chi, dist, n, alpha_n, count, stream, variance_reduced);
    switch (kind) {
        case BiasKind::theoretical: return b.h1;
        case BiasKind::practical: return b.h2;
        case BiasKind::symmetric: return b.h3;
        case BiasKind::singular: return b.h4;
        default: break;
    }
    throw std::logic_error("bias_estimate: unreachable");
}

EstimateWithError gamma_estimate(const TestFunction& phi, const DistributionSpec& dist, int n,
                                 std::size_t count, RandomStream stream, const GraduationMap& map) {
    const double n2 = static_cast<double>(n) * n;
    auto values = replicate_values(count, stream, [&](RandomStream& rs) {
        const double y = dist.sample(rs);
        const double yn = graduate(y, n, map);
        const double d = phi.f(yn) - phi.f(y);
        return n2 * d * d;
    });
    return mean_with_se(values);
}

std::vector<double> conditional_bias_curve(const TestFunction& phi, int n,
                                           std::span<const double> y_grid) {
    if (n < 1) throw std::invalid_argument("conditional_bias_curve: n must be >= 1");
    const double n2 = static_cast<double>(n) * n;
    std::vector<double> out(y_grid.size());
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        const double y = y_grid[i];
        out[i] = n2 * (phi.f(y + theta(n * y) / n) - phi.f(y));
    }
    return out;
}

double conditional_bias_pairing(const TestFunction& phi, const TestFunction& chi, int n,
                                double lo, double hi, int points_per_cell) {
    if (points_per_cell < 1) throw std::invalid_argument("conditional_bias_pairing: need points");
    // Midpoint rule with cells aligned to the graduation grid, so the
    // oscillation is resolved exactly cell by cell.
    const long first = static_cast<long>(std::floor(lo * n));
    const long last = static_cast<long>(std::ceil(hi * n));
    const double h = 1.0 / (static_cast<double>(n) * points_per_cell);
    const double n2 = static_cast<double>(n) * n;
    double acc = 0.0;
    for (long cell = first; cell < last; ++cell) {
        for (int j = 0; j < points_per_cell; ++j) {
            const double y = (static_cast<double>(cell) + (j + 0.5) / points_per_cell) / n;
            const double g = n2 * (phi.f(y + theta(n * y) / n) - phi.f(y));
            acc += g * chi.f(y) * h;
        }
    }
    return acc;
}

std::vector<double> first_order_defect_samples(const TestFunction& phi, const TestFunction& psi,
                                               const TestFunction& chi, const DistributionSpec& dist,
                                               int n, std::size_t count, RandomStream stream) {
    const double half_n2 = 0.5 * static_cast<double>(n) * n;
    return replicate_values(count, stream, [&](RandomStream& rs) {
        const double y = dist.sample(rs);
        const double yn = y + theta(n * y) / n;
        const double p = phi.f(y), pn = phi.f(yn);
        const double q = psi.f(y), qn = psi.f(yn);
        const double c = chi.f(y), cn = chi.f(yn);
        // singular bracket of the product minus both corrections; collapses
        // to a third-order increment, per replicate
        const double product_term = (pn * qn - p * q) * (cn + c);
        const double phi_term = (pn - p) * (qn * cn + q * c);
        const double psi_term = (qn - q) * (pn * cn + p * c);
        return half_n2 * (product_term - phi_term - psi_term);
    });
}

EstimateWithError first_order_check(const TestFunction& phi, const TestFunction& psi,
                                    const TestFunction& chi, const DistributionSpec& dist,
                                    int n, std::size_t count, RandomStream stream) {
    const auto samples = first_order_defect_samples(phi, psi, chi, dist, n, count, stream);
    return mean_with_se(samples);
}

std::pair<EstimateWithError, EstimateWithError> girsanov_gamma_check(
    const TestFunction& phi, const TestFunction& weight, const DistributionSpec& dist,
    int n, std::size_t count, RandomStream stream) {
    const double n2 = static_cast<double>(n) * n;
    std::vector<double> w(count), dynamic_raw(count), static_raw(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        const double y = dist.sample(rs);
        const double f = weight.f(y);
        w[r] = f;
        const double d = phi.f(y + theta(n * y) / n) - phi.f(y);
        dynamic_raw[r] = f * n2 * d * d;
        const double dp = phi.df(y);
        static_raw[r] = f * dp * dp / 12.0;
    });
    for (double f : w) {
        if (!(f > 0.0)) throw std::invalid_argument("girsanov_gamma_check: weight not positive on sample");
    }
    const double mean_w = pairwise_sum(w) / static_cast<double>(count);
    for (std::size_t r = 0; r < count; ++r) {
        dynamic_raw[r] /= mean_w;
        static_raw[r] /= mean_w;
    }
    return {mean_with_se(dynamic_raw), mean_with_se(static_raw)};
}

EstimateWithError general_graduation_bias(const TestFunction& phi,
                                          const std::function<double(double, int)>& displacement,
                                          double alpha_n, const DistributionSpec& dist, int n,
                                          std::size_t count, RandomStream stream,
                                          bool variance_reduced) {
    if (!displacement) throw std::invalid_argument("general_graduation_bias: displacement required");
    auto values = replicate_values(count, stream, [&](RandomStream& rs) {
        const double y = dist.sample(rs);
        const double xi = displacement(y, n);
        const double raw = alpha_n * (phi.f(y + xi) - phi.f(y));
        const double cv = variance_reduced ? alpha_n * phi.df(y) * xi : 0.0;
        return raw - cv;
    });
    return mean_with_se(values);
}

ShiftBias shift_bias_default(const DistributionSpec& dist, int n, std::size_t count,
                             RandomStream stream, const TestFunction& phi, const TestFunction& chi) {
    std::vector<double> shift(count), sym(count);
    const double nn = static_cast<double>(n);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        const double y = dist.sample(rs);
        const double yn = graduate(y, n, GraduationMap::down());
        shift[r] = nn * (yn - y);
        sym[r] = nn * (phi.f(yn) - phi.f(y)) * (chi.f(yn) - chi.f(y));
    });
    return {mean_with_se(shift), mean_with_se(sym)};
}

EstimateWithError fourth_moment_scaled(const TestFunction& phi, const DistributionSpec& dist,
                                       int n, std::size_t count, RandomStream stream) {
    const double n2 = static_cast<double>(n) * n;
    auto values = replicate_values(count, stream, [&](RandomStream& rs) {
        const double y = dist.sample(rs);
        const double d = phi.f(y + theta(n * y) / n) - phi.f(y);
        const double d2 = d * d;
        return n2 * d2 * d2;
    });
    return mean_with_se(values);
}

EstimateWithError gradient_representation_defect(const TestFunction& phi,
                                                 const DistributionSpec& dist,
                                                 std::size_t count, RandomStream stream) {
    auto values = replicate_values(count, stream, [&](RandomStream& rs) {
        const double y = dist.sample(rs);
        const double v = rs.next_uniform() - 0.5;
        const double dp = phi.df(y);
        return v * v * dp * dp - dp * dp / 12.0;
    });
    return mean_with_se(values);
}

}  // namespace arbfn
