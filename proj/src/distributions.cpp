#include "arbfn/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace arbfn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

std::vector<double> sample(const DistributionSpec& dist, RandomStream& stream, std::size_t count) {
    if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
    std::vector<double> out(count);
    for (auto& v : out) v = dist.sampler(stream);
    return out;
}

DistributionSpec normal_dist(double mu, double sigma) {
    DistributionSpec d;
    d.name = "normal";
    d.absolutely_continuous = true;
    d.sampler = [mu, sigma](RandomStream& s) { return mu + sigma * s.next_normal(); };
    d.density = [mu, sigma](double y) {
        const double z = (y - mu) / sigma;
        return std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
    };
    d.score = [mu, sigma](double y) { return -(y - mu) / (sigma * sigma); };
    d.cf = [mu, sigma](double u) {
        return std::exp(std::complex<double>(-0.5 * sigma * sigma * u * u, mu * u));
    };
    d.cdf = [mu, sigma](double y) { return normal_cdf((y - mu) / sigma); };
    return d;
}

DistributionSpec uniform_dist(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("uniform_dist: need b > a");
    DistributionSpec d;
    d.name = "uniform";
    d.absolutely_continuous = true;
    d.sampler = [a, b](RandomStream& s) { return a + (b - a) * s.next_uniform(); };
    d.density = [a, b](double y) { return (y >= a && y < b) ? 1.0 / (b - a) : 0.0; };
    // no score: the density derivative carries boundary atoms
    d.cf = [a, b](double u) -> std::complex<double> {
        if (u == 0.0) return 1.0;
        const std::complex<double> iu(0.0, u);
        return (std::exp(iu * b) - std::exp(iu * a)) / (iu * (b - a));
    };
    d.cdf = [a, b](double y) {
        if (y <= a) return 0.0;
        if (y >= b) return 1.0;
        return (y - a) / (b - a);
    };
    return d;
}

DistributionSpec exponential_dist(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("exponential_dist: lambda must be > 0");
    DistributionSpec d;
    d.name = "exponential";
    d.absolutely_continuous = true;
    d.sampler = [lambda](RandomStream& s) { return -std::log(s.next_uniform_open()) / lambda; };
    d.density = [lambda](double y) { return y >= 0.0 ? lambda * std::exp(-lambda * y) : 0.0; };
    // Valid against test functions vanishing at 0 (the boundary atom of p'
    // is not seen there).
    d.score = [lambda](double) { return -lambda; };
    d.cf = [lambda](double u) {
        return lambda / std::complex<double>(lambda, -u);
    };
    d.cdf = [lambda](double y) { return y <= 0.0 ? 0.0 : 1.0 - std::exp(-lambda * y); };
    return d;
}

DistributionSpec lattice_dist(int m) {
    if (m < 1) throw std::invalid_argument("lattice_dist: m must be >= 1");
    DistributionSpec d;
    d.name = "lattice" + std::to_string(m);
    d.absolutely_continuous = false;
    d.sampler = [m](RandomStream& s) {
        const int k = static_cast<int>(s.next_uniform() * m);
        return static_cast<double>(k < m ? k : m - 1) / m;
    };
    d.cf = [m](double u) {
        std::complex<double> acc(0.0, 0.0);
        for (int k = 0; k < m; ++k) acc += std::exp(std::complex<double>(0.0, u * k / m));
        return acc / static_cast<double>(m);
    };
    d.cdf = [m](double y) {
        if (y < 0.0) return 0.0;
        const double k = std::floor(y * m) + 1.0;
        return std::min(1.0, k / m);
    };
    return d;
}

DistributionSpec mixture_dist(std::vector<DistributionSpec> components, std::vector<double> weights) {
    if (components.empty() || components.size() != weights.size())
        throw std::invalid_argument("mixture_dist: components/weights mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("mixture_dist: weights must be positive");
        total += w;
    }
    for (auto& w : weights) w /= total;

    auto comps = std::make_shared<std::vector<DistributionSpec>>(std::move(components));
    auto wts = std::make_shared<std::vector<double>>(std::move(weights));

    DistributionSpec d;
    d.name = "mixture";
    d.absolutely_continuous = true;
    for (const auto& c : *comps) d.absolutely_continuous = d.absolutely_continuous && c.absolutely_continuous;
    d.sampler = [comps, wts](RandomStream& s) {
        double u = s.next_uniform();
        for (std::size_t i = 0; i + 1 < comps->size(); ++i) {
            if (u < (*wts)[i]) return (*comps)[i].sampler(s);
            u -= (*wts)[i];
        }
        return comps->back().sampler(s);
    };
    bool have_density = true, have_cf = true, have_cdf = true;
    for (const auto& c : *comps) {
        have_density = have_density && static_cast<bool>(c.density);
        have_cf = have_cf && static_cast<bool>(c.cf);
        have_cdf = have_cdf && static_cast<bool>(c.cdf);
    }
    if (have_density) {
        d.density = [comps, wts](double y) {
            double p = 0.0;
            for (std::size_t i = 0; i < comps->size(); ++i) p += (*wts)[i] * (*comps)[i].density(y);
            return p;
        };
    }
    if (have_cf) {
        d.cf = [comps, wts](double u) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t i = 0; i < comps->size(); ++i) acc += (*wts)[i] * (*comps)[i].cf(u);
            return acc;
        };
    }
    if (have_cdf) {
        d.cdf = [comps, wts](double y) {
            double p = 0.0;
            for (std::size_t i = 0; i < comps->size(); ++i) p += (*wts)[i] * (*comps)[i].cdf(y);
            return p;
        };
    }
    return d;
}

DistributionSpec cantor_dist() {
    constexpr int kDigits = 40;  // 3^-40 is far below double resolution
    DistributionSpec d;
    d.name = "cantor";
    d.absolutely_continuous = false;
    d.sampler = [](RandomStream& s) {
        const std::uint64_t bits = s.next_u64();
        double x = 0.0;
        double scale = 1.0;
        for (int j = 0; j < kDigits; ++j) {
            scale /= 3.0;
            if ((bits >> j) & 1u) x += 2.0 * scale;
        }
        return x;
    };
    d.cf = [](double u) {
        std::complex<double> acc = std::exp(std::complex<double>(0.0, 0.5 * u));
        double scale = 1.0;
        for (int j = 0; j < kDigits; ++j) {
            scale /= 3.0;
            acc *= std::cos(u * scale);
        }
        return acc;
    };
    return d;
}

DistributionSpec make_distribution(const std::string& name) {
    if (name == "normal") return normal_dist();
    if (name == "uniform") return uniform_dist(0.0, 1.0);
    if (name == "exponential") return exponential_dist(1.0);
    if (name == "lattice10") return lattice_dist(10);
    if (name == "cantor") return cantor_dist();
    if (name == "mixture") {
        std::vector<DistributionSpec> comps;
        comps.push_back(normal_dist(0.0, 1.0));
        comps.push_back(uniform_dist(-1.0, 2.0));
        return mixture_dist(std::move(comps), {0.5, 0.5});
    }
    throw std::invalid_argument("make_distribution: unknown family '" + name + "'");
}

std::vector<std::string> distribution_catalog() {
    return {"normal", "uniform", "exponential", "lattice10", "mixture", "cantor"};
}

}  // namespace arbfn
