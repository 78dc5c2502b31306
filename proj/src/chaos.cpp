#include "arbfn/chaos.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arbfn {

namespace {

constexpr int kMaxOrder = 3;

void check_order(int k) {
    if (k < 1 || k > kMaxOrder) throw std::invalid_argument("chaos: order must be in [1, 3]");
}

void check_grid(const ChaosElement& x, const GridPath& path) {
    if (x.grid_steps() != path.steps()) throw std::invalid_argument("chaos: kernel/path grid mismatch");
}

}  // namespace

double chaos_norm2(int k, std::span<const std::complex<double>> cell_factors) {
    check_order(k);
    const double inv_m = 1.0 / static_cast<double>(cell_factors.size());
    std::array<double, kMaxOrder + 1> e{};
    e[0] = 1.0;
    for (const auto& g : cell_factors) {
        const double x = std::norm(g) * inv_m;
        for (int p = k; p >= 1; --p) e[p] += x * e[p - 1];
    }
    return e[k];
}

ChaosElement make_chaos_product(int k, std::vector<std::complex<double>> cell_factors) {
    check_order(k);
    if (cell_factors.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("chaos: grid too small for the order");
    ChaosElement x;
    x.order = k;
    x.norm2 = chaos_norm2(k, cell_factors);
    x.cell = std::move(cell_factors);
    return x;
}

ChaosElement make_chaos_constant(int k, std::size_t m, double scale) {
    return make_chaos_product(k, std::vector<std::complex<double>>(m, scale));
}

std::complex<double> eval_chaos(const ChaosElement& x, const GridPath& path) {
    check_grid(x, path);
    const std::size_t m = path.steps();
    std::array<std::complex<double>, kMaxOrder + 1> s{};
    s[0] = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::complex<double> w = x.cell[j] * (path.values[j + 1] - path.values[j]);
        for (int p = x.order; p >= 1; --p) s[p] += w * s[p - 1];
    }
    return s[x.order];
}

std::complex<double> rn_transform(const ChaosElement& x, int n, const OscillatorSpec& theta_osc,
                                  const GridPath& path) {
    check_grid(x, path);
    const std::size_t m = path.steps();
    if (m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("rn_transform: unresolved oscillation, need m >= 16 n");
    if (std::fabs(theta_osc.mean) > 1e-6 || std::fabs(theta_osc.l2norm2 - 1.0) > 1e-6)
        throw std::invalid_argument("rn_transform: theta must have mean 0 and unit L2 norm");
    std::array<std::complex<double>, kMaxOrder + 1> s{};
    s[0] = 1.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < m; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
        const std::complex<double> phase = std::exp(std::complex<double>(0.0, inv_n * theta_osc.f(n * mid)));
        const std::complex<double> w = x.cell[j] * phase * (path.values[j + 1] - path.values[j]);
        for (int p = x.order; p >= 1; --p) s[p] += w * s[p - 1];
    }
    return s[x.order];
}

std::complex<double> sharp_gradient(const ChaosElement& x, const GridPath& path_b,
                                    const GridPath& path_w) {
    check_grid(x, path_b);
    check_grid(x, path_w);
    const std::size_t m = path_b.steps();
    // t[p][w]: order-p prefix sums, w = 1 when one slot already uses dW
    std::array<std::array<std::complex<double>, 2>, kMaxOrder + 1> t{};
    t[0][0] = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double db = path_b.values[j + 1] - path_b.values[j];
        const double dw = path_w.values[j + 1] - path_w.values[j];
        for (int p = x.order; p >= 1; --p) {
            t[p][1] += x.cell[j] * (db * t[p - 1][1] + dw * t[p - 1][0]);
            t[p][0] += x.cell[j] * db * t[p - 1][0];
        }
    }
    return t[x.order][1];
}

double theorem9_value(const ChaosElement& x, int n, const OscillatorSpec& theta_osc) {
    const std::size_t m = x.grid_steps();
    if (m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("theorem9_value: unresolved oscillation, need m >= 16 n");
    const double inv_m = 1.0 / static_cast<double>(m);
    const double inv_n = 1.0 / static_cast<double>(n);
    std::array<double, kMaxOrder + 1> e{};
    std::array<std::complex<double>, kMaxOrder + 1> v{};
    e[0] = 1.0;
    v[0] = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) * inv_m;
        const double u = std::norm(x.cell[j]) * inv_m;
        const std::complex<double> w = u * std::exp(std::complex<double>(0.0, inv_n * theta_osc.f(n * mid)));
        for (int p = x.order; p >= 1; --p) {
            e[p] += u * e[p - 1];
            v[p] += w * v[p - 1];
        }
    }
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return 2.0 * n2 * (e[x.order] - v[x.order].real());
}

double theorem9_target(const ChaosElement& x) {
    return static_cast<double>(x.order) * x.norm2;
}

double rn_domination_bound(const ChaosElement& x, const OscillatorSpec& theta_osc) {
    const double k = static_cast<double>(x.order);
    return k * k * x.norm2 * theta_osc.sup_norm * theta_osc.sup_norm;
}

RotationSchedule rotation_full_turn() {
    return {"full_turn", [](double s) {
                const double a = 2.0 * std::numbers::pi * s;
                const double c = std::cos(a), d = std::sin(a);
                return std::array<double, 4>{c, -d, d, c};
            }};
}

RotationSchedule rotation_identity() {
    return {"identity", [](double) { return std::array<double, 4>{1.0, 0.0, 0.0, 1.0}; }};
}

double schedule_orthogonality_defect(const RotationSchedule& schedule, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const auto m = schedule.matrix((i + 0.5) / samples);
        const double g00 = m[0] * m[0] + m[2] * m[2];
        const double g01 = m[0] * m[1] + m[2] * m[3];
        const double g11 = m[1] * m[1] + m[3] * m[3];
        worst = std::max({worst, std::fabs(g00 - 1.0), std::fabs(g01), std::fabs(g11 - 1.0)});
    }
    return worst;
}

double schedule_mean_norm(const RotationSchedule& schedule, int samples) {
    std::array<double, 4> acc{};
    for (int i = 0; i < samples; ++i) {
        const auto m = schedule.matrix((i + 0.5) / samples);
        for (int j = 0; j < 4; ++j) acc[j] += m[j];
    }
    double worst = 0.0;
    for (double a : acc) worst = std::max(worst, std::fabs(a / samples));
    return worst;
}

RotationReport rotation_transform(
    const std::function<double(const GridPath&, const GridPath&)>& functional,
    const RotationSchedule& schedule, int n, std::size_t m, std::size_t count,
    RandomStream stream, const std::function<double(double)>& reference_cdf) {
    if (schedule_orthogonality_defect(schedule) > 1e-12)
        throw std::invalid_argument("rotation_transform: schedule is not orthogonal");
    if (n > 0 && m < 16 * static_cast<std::size_t>(n))
        throw std::invalid_argument("rotation_transform: unresolved oscillation, need m >= 16 n");
    std::vector<double> tx(count), b1(count);
    parallel_replicates(count, default_threads(), [&](std::size_t r) {
        RandomStream rs = derive_stream(stream.seed(), stream.stream_id() + r);
        RandomStream rs1 = rs.substream(0);
        RandomStream rs2 = rs.substream(1);
        const GridPath bx = brownian_path(m, rs1);
        const GridPath by = brownian_path(m, rs2);
        GridPath tx1, tx2;
        tx1.values.resize(m + 1);
        tx2.values.resize(m + 1);
        tx1.values[0] = tx2.values[0] = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double mid = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
            const auto mat = schedule.matrix(n * mid);
            const double dx = bx.values[j + 1] - bx.values[j];
            const double dy = by.values[j + 1] - by.values[j];
            tx1.values[j + 1] = tx1.values[j] + mat[0] * dx + mat[1] * dy;
            tx2.values[j + 1] = tx2.values[j] + mat[2] * dx + mat[3] * dy;
        }
        tx[r] = functional(tx1, tx2);
        b1[r] = bx.back();
    });
    RotationReport report;
    report.replicates = count;
    report.ks_vs_reference = ks_distance(tx, reference_cdf);
    report.cov_with_b1 = covariance_with_se(tx, b1);
    return report;
}

}  // namespace arbfn
