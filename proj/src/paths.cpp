#include "arbfn/paths.hpp"

#include <cmath>
#include <stdexcept>

#include "arbfn/graduation.hpp"

namespace arbfn {

GridPath brownian_path(std::size_t m, RandomStream& stream, double horizon) {
    if (m < 1) throw std::invalid_argument("brownian_path: m must be >= 1");
    GridPath p;
    p.horizon = horizon;
    p.values.resize(m + 1);
    p.values[0] = 0.0;
    const double sd = std::sqrt(horizon / static_cast<double>(m));
    for (std::size_t k = 0; k < m; ++k) p.values[k + 1] = p.values[k] + sd * stream.next_normal();
    return p;
}

BrownianSkeleton brownian_skeleton(std::size_t m, RandomStream& stream) {
    BrownianSkeleton s;
    s.path = brownian_path(m, stream);
    s.step_areas.resize(m);
    const double dt = s.path.dt();
    const double area_sd = std::sqrt(dt * dt * dt / 12.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double db = s.path.values[j + 1] - s.path.values[j];
        s.step_areas[j] = 0.5 * dt * db + area_sd * stream.next_normal();
    }
    return s;
}

GridPath ito_sum(std::span<const double> integrand, const GridPath& path) {
    const std::size_t m = path.steps();
    if (integrand.size() != m) throw std::invalid_argument("ito_sum: integrand length mismatch");
    GridPath out;
    out.horizon = path.horizon;
    out.values.resize(m + 1);
    out.values[0] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        out.values[j + 1] = out.values[j] + integrand[j] * (path.values[j + 1] - path.values[j]);
    }
    return out;
}

GridPath time_changed_path(const GridPath& base, const TimeChangeClock& clock) {
    if (!clock.a) throw std::invalid_argument("time_changed_path: clock required");
    const std::size_t m = base.steps();
    GridPath out;
    out.horizon = 1.0;
    out.values.resize(m + 1);
    double prev = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(m);
        const double a = clock.a(t);
        if (k == 0 && std::fabs(a) > 1e-12) throw std::invalid_argument("time_changed_path: a(0) must be 0");
        if (a < prev) throw std::invalid_argument("time_changed_path: clock must be nondecreasing");
        if (a > base.horizon * (1.0 + 1e-12)) throw std::invalid_argument("time_changed_path: clock exceeds base horizon");
        prev = a;
        // linear interpolation of the base path at time a
        const double pos = a / base.horizon * static_cast<double>(m);
        const std::size_t lo = std::min(static_cast<std::size_t>(pos), m - 1);
        const double w = pos - static_cast<double>(lo);
        out.values[k] = base.values[lo] * (1.0 - w) + base.values[lo + 1] * w;
    }
    return out;
}

OscillatorSpec osc_sawtooth() {
    return {"sawtooth", [](double x) { return theta(x); }, 0.0, 1.0 / 12.0, 0.5};
}

OscillatorSpec osc_unit_sawtooth() {
    const double c = std::sqrt(12.0);
    return {"unit_sawtooth", [c](double x) { return c * theta(x); }, 0.0, 1.0, 0.5 * c};
}

OscillatorSpec osc_frac() {
    return {"frac", [](double x) { return frac(x); }, 0.5, 1.0 / 3.0, 1.0};
}

double oscillator_moment_defect(const OscillatorSpec& osc, int nodes) {
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x = (i + 0.5) / nodes;
        const double v = osc.f(x);
        m1 += v;
        m2 += v * v;
    }
    m1 /= nodes;
    m2 /= nodes;
    return std::max(std::fabs(m1 - osc.mean), std::fabs(m2 - osc.l2norm2));
}

GridPath oscillating_integral(const OscillatorSpec& osc, int n, const GridPath& martingale) {
    const std::size_t m = martingale.steps();
    if (n < 1) throw std::invalid_argument("oscillating_integral: n must be >= 1");
    if (m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("oscillating_integral: unresolved oscillation, need m >= 16 n");
    GridPath out;
    out.horizon = martingale.horizon;
    out.values.resize(m + 1);
    out.values[0] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
        const double w = osc.f(n * mid);
        out.values[j + 1] = out.values[j] + w * (martingale.values[j + 1] - martingale.values[j]);
    }
    return out;
}

double oscillating_primitive_sup(const OscillatorSpec& osc, int n, std::size_t m) {
    double acc = 0.0, sup = 0.0;
    const double h = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) * h;
        acc += osc.f(n * mid) * h;
        sup = std::max(sup, std::fabs(acc));
    }
    return sup;
}

KurtzProtterSample kurtz_protter_sample(int n, std::size_t m, RandomStream& stream) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("kurtz_protter_sample: n must be even and >= 2");
    if (m % static_cast<std::size_t>(n) != 0 || m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("kurtz_protter_sample: m must be a multiple of n with m >= 16 n");

    const BrownianSkeleton sk = brownian_skeleton(m, stream);
    const auto& b = sk.path.values;
    const double h = 1.0 / static_cast<double>(m);
    const std::size_t cell_len = m / static_cast<std::size_t>(n);
    const double nn = static_cast<double>(n);
    const double sqrt_n = std::sqrt(nn);

    KurtzProtterSample out{};
    double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
    const std::size_t half = m / 2;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t cell_start = (j / cell_len) * cell_len;
        const double t_j = static_cast<double>(j) * h;
        const double cell_t = static_cast<double>(cell_start) * h;
        const double db = b[j + 1] - b[j];
        const double z = sk.step_areas[j];
        // exact in-step integrals: int (s - c) dB = (t_j - c) dB + h dB - Z,
        // int (B - B_c) ds = (B_j - B_c) h + Z,
        // int (B - B_c) dB = (B_j - B_c) dB + (dB^2 - h)/2
        const double stick = h * db - z;
        p1 += nn * ((t_j - cell_t - 0.5 / nn) * db + stick);
        p2 += nn * ((t_j - cell_t) * db + stick);
        p3 += nn * ((b[j] - b[cell_start]) * h + z);
        p4 += sqrt_n * ((b[j] - b[cell_start]) * db + 0.5 * (db * db - h));
        if (j + 1 == half) {
            out.p1_half = p1;
            out.p2_half = p2;
            out.p3_half = p3;
            out.p4_half = p4;
            out.b_half = b[half];
        }
    }
    out.p1_one = p1;
    out.p2_one = p2;
    out.p3_one = p3;
    out.p4_one = p4;
    out.b_one = b[m];
    return out;
}

namespace {

struct OscPair {
    double plain;  // int g dM
    double osc;    // int g f(ns) dM
};

OscPair integral_pair(const std::function<double(double)>& g, const OscillatorSpec& osc, int n,
                      const GridPath& mart) {
    const std::size_t m = mart.steps();
    OscPair out{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const double t_left = static_cast<double>(j) / static_cast<double>(m);
        const double t_mid = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
        const double dm = mart.values[j + 1] - mart.values[j];
        const double gj = g(t_left);
        out.plain += gj * dm;
        out.osc += gj * osc.f(n * t_mid) * dm;
    }
    return out;
}

}  // namespace

ComplexEstimate theorem6_bracket(const std::function<double(double)>& eta,
                                 const std::function<double(double)>& zeta,
                                 const OscillatorSpec& osc, int n, std::size_t m,
                                 std::size_t count, RandomStream stream,
                                 const TimeChangeClock* clock) {
    if (m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("theorem6_bracket: unresolved oscillation, need m >= 16 n");
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    std::vector<std::complex<double>> values(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        GridPath mart = brownian_path(m, rs);
        if (clock) mart = time_changed_path(mart, *clock);
        const OscPair a = integral_pair(eta, osc, n, mart);
        const OscPair c = integral_pair(zeta, osc, n, mart);
        const std::complex<double> i(0.0, 1.0);
        const auto da = std::exp(i * (a.plain + a.osc / static_cast<double>(n))) - std::exp(i * a.plain);
        const auto dc = std::exp(i * (c.plain + c.osc / static_cast<double>(n))) - std::exp(i * c.plain);
        values[r] = n2 * da * dc;
    });
    return mean_with_se_complex(values);
}

ComplexEstimate theorem7_cf_form(const std::function<double(double)>& xi,
                                 const OscillatorSpec& osc, int n, std::size_t m,
                                 std::size_t count, RandomStream stream) {
    return theorem6_bracket(xi, xi, osc, n, m, count, stream, nullptr);
}

}  // namespace arbfn
