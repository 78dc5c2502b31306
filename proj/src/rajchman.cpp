#include "arbfn/rajchman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arbfn/graduation.hpp"

namespace arbfn {

CfDecayProfile cf_decay_profile(const DistributionSpec& dist, std::span<const double> frequencies,
                                std::size_t count, RandomStream stream, bool force_empirical) {
    for (std::size_t i = 0; i + 1 < frequencies.size(); ++i) {
        if (!(frequencies[i] < frequencies[i + 1]))
            throw std::invalid_argument("cf_decay_profile: frequencies must be increasing");
    }
    CfDecayProfile profile;
    profile.frequencies.assign(frequencies.begin(), frequencies.end());
    if (dist.cf && !force_empirical) {
        profile.source = CfDecayProfile::Source::exact_formula;
        for (double u : frequencies) {
            profile.moduli.push_back(std::abs(dist.cf(u)));
            profile.std_errors.push_back(0.0);
        }
        return profile;
    }
    profile.source = CfDecayProfile::Source::empirical;
    const auto xs = sample(dist, stream, count);
    for (double u : frequencies) {
        std::vector<double> re(count), im(count);
        for (std::size_t k = 0; k < count; ++k) {
            re[k] = std::cos(u * xs[k]);
            im[k] = std::sin(u * xs[k]);
        }
        const auto mre = mean_with_se(re);
        const auto mim = mean_with_se(im);
        profile.moduli.push_back(std::hypot(mre.value, mim.value));
        profile.std_errors.push_back(std::hypot(mre.std_error, mim.std_error));
    }
    return profile;
}

RajchmanVerdict classify_rajchman(const CfDecayProfile& profile, double threshold) {
    if (profile.moduli.empty()) return RajchmanVerdict::inconclusive;
    const double u_max = profile.frequencies.back();
    double tail_max = -1.0;
    double head_max = 0.0;
    for (std::size_t i = 0; i < profile.frequencies.size(); ++i) {
        if (profile.frequencies[i] > 0.5 * u_max) {
            tail_max = std::max(tail_max, profile.moduli[i]);
        } else {
            head_max = std::max(head_max, profile.moduli[i]);
        }
    }
    if (tail_max < 0.0) return RajchmanVerdict::inconclusive;  // empty tail window
    if (tail_max > 1.0 - threshold) return RajchmanVerdict::persistent;
    if (tail_max < threshold && tail_max <= head_max) return RajchmanVerdict::decaying;
    return RajchmanVerdict::inconclusive;
}

std::string to_string(RajchmanVerdict v) {
    switch (v) {
        case RajchmanVerdict::decaying: return "decaying";
        case RajchmanVerdict::persistent: return "persistent";
        case RajchmanVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ArbitraryFunctionsReport arbitrary_functions_test(const DistributionSpec& x_dist,
                                                  const DistributionSpec& y_dist, int n,
                                                  std::size_t count, RandomStream stream,
                                                  std::span<const int> k_grid,
                                                  std::span<const double> zeta_grid) {
    if (n < 1) throw std::invalid_argument("arbitrary_functions_test: n must be >= 1");
    std::vector<double> xs(count), vs(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        const double x = x_dist.sample(rs);
        const double y = y_dist.sample(rs);
        xs[r] = x;
        vs[r] = frac(n * x + y);
    });

    ArbitraryFunctionsReport report;
    report.replicates = count;
    report.ks_uniform = ks_distance(vs, [](double t) { return std::clamp(t, 0.0, 1.0); });

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> re(count), im(count);
    auto complex_mean = [&](auto&& phase_fn) {
        for (std::size_t r = 0; r < count; ++r) {
            const double p = phase_fn(r);
            re[r] = std::cos(p);
            im[r] = std::sin(p);
        }
        const auto mre = mean_with_se(re);
        const auto mim = mean_with_se(im);
        return std::pair(std::complex<double>(mre.value, mim.value),
                         std::hypot(mre.std_error, mim.std_error));
    };

    for (int k : k_grid) {
        for (double zeta : zeta_grid) {
            JointCfCell cell;
            cell.k = k;
            cell.zeta = zeta;
            auto [joint, joint_se] = complex_mean([&](std::size_t r) { return two_pi * k * vs[r] + zeta * xs[r]; });
            auto [mv, mv_se] = complex_mean([&](std::size_t r) { return two_pi * k * vs[r]; });
            auto [mx, mx_se] = complex_mean([&](std::size_t r) { return zeta * xs[r]; });
            cell.joint = joint;
            cell.joint_se = joint_se;
            cell.marginal_product = mv * mx;
            cell.product_se = std::abs(mv) * mx_se + std::abs(mx) * mv_se;
            report.cells.push_back(cell);
        }
    }
    return report;
}

}  // namespace arbfn
