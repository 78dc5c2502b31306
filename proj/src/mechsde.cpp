#include "arbfn/mechsde.hpp"

#include <cmath>
#include <stdexcept>

namespace arbfn {

namespace {

constexpr double kSqrt12 = 3.4641016151377543863532718286;

std::function<double(double, double)> zero2() {
    return [](double, double) { return 0.0; };
}

}  // namespace

SdeSystem sde_constant() {
    SdeSystem s;
    s.name = "constant";
    s.x10 = 0.0;
    s.x20 = 0.0;
    s.f11 = [](double) { return 1.0; };
    s.d_f11 = [](double) { return 0.0; };
    s.f12 = zero2();
    s.d1_f12 = zero2();
    s.d2_f12 = zero2();
    s.f22 = zero2();
    s.d1_f22 = zero2();
    s.d2_f22 = zero2();
    return s;
}

SdeSystem sde_linear() {
    SdeSystem s;
    s.name = "linear";
    s.x10 = 1.0;
    s.x20 = 1.0;
    s.f11 = [](double x2) { return x2; };
    s.d_f11 = [](double) { return 1.0; };
    s.f12 = zero2();
    s.d1_f12 = zero2();
    s.d2_f12 = zero2();
    s.f22 = [](double x1, double) { return x1; };
    s.d1_f22 = [](double, double) { return 1.0; };
    s.d2_f22 = zero2();
    return s;
}

SdeSystem sde_pendulum(double sigma) {
    SdeSystem s;
    s.name = "pendulum";
    s.x10 = 0.0;  // velocity
    s.x20 = 1.0;  // position
    s.f11 = [sigma](double x2) { return sigma / (1.0 + x2 * x2); };
    s.d_f11 = [sigma](double x2) {
        const double q = 1.0 + x2 * x2;
        return -2.0 * sigma * x2 / (q * q);
    };
    s.f12 = [](double x1, double x2) { return -std::sin(x2) - 0.1 * x1; };
    s.d1_f12 = [](double, double) { return -0.1; };
    s.d2_f12 = [](double, double x2) { return -std::cos(x2); };
    s.f22 = [](double x1, double) { return x1; };
    s.d1_f22 = [](double, double) { return 1.0; };
    s.d2_f22 = zero2();
    return s;
}

SdeSystem sde_full_coupling() {
    SdeSystem s = sde_linear();
    s.name = "full";
    s.f21 = [](double x1, double) { return 0.5 * x1; };
    return s;
}

SdeSystem make_system(const std::string& name) {
    if (name == "constant") return sde_constant();
    if (name == "linear") return sde_linear();
    if (name == "pendulum") return sde_pendulum();
    if (name == "full") return sde_full_coupling();
    throw std::invalid_argument("make_system: unknown system '" + name + "'");
}

std::vector<std::string> system_catalog() {
    return {"constant", "linear", "pendulum", "full"};
}

bool block_structure_ok(const SdeSystem& sys) {
    return !static_cast<bool>(sys.f21);
}

PathPair euler_solve(const SdeSystem& sys, std::size_t n, const GridPath& driving) {
    const std::size_t m = driving.steps();
    if (n < 1 || m % n != 0) throw std::invalid_argument("euler_solve: fine grid must be a multiple of n");
    const std::size_t cell = m / n;
    const double h = 1.0 / static_cast<double>(n);

    std::vector<double> x1(n + 1), x2(n + 1);
    x1[0] = sys.x10;
    x2[0] = sys.x20;
    for (std::size_t k = 0; k < n; ++k) {
        const double db = driving.values[(k + 1) * cell] - driving.values[k * cell];
        const double a11 = sys.f11(x2[k]);
        const double a12 = sys.f12(x1[k], x2[k]);
        const double a22 = sys.f22(x1[k], x2[k]);
        x1[k + 1] = x1[k] + a11 * db + a12 * h;
        x2[k + 1] = x2[k] + a22 * h;
        if (!std::isfinite(x1[k + 1]) || !std::isfinite(x2[k + 1]))
            throw std::runtime_error("euler_solve: coefficient overflow, replicate aborted");
    }

    PathPair out;
    out.x1.values.resize(m + 1);
    out.x2.values.resize(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        const std::size_t k = j / cell;
        if (k == n) {
            out.x1.values[j] = x1[n];
            out.x2.values[j] = x2[n];
            continue;
        }
        const double w = static_cast<double>(j - k * cell) / static_cast<double>(cell);
        out.x1.values[j] = x1[k] * (1.0 - w) + x1[k + 1] * w;
        out.x2.values[j] = x2[k] * (1.0 - w) + x2[k + 1] * w;
    }
    return out;
}

PathPair reference_solve(const SdeSystem& sys, const GridPath& driving) {
    return euler_solve(sys, driving.steps(), driving);
}

PathPair scaled_error(std::size_t n, const PathPair& coarse, const PathPair& reference) {
    const std::size_t m = reference.x1.steps();
    if (coarse.x1.steps() != m) throw std::invalid_argument("scaled_error: grid mismatch");
    PathPair out;
    out.x1.values.resize(m + 1);
    out.x2.values.resize(m + 1);
    const double nn = static_cast<double>(n);
    for (std::size_t j = 0; j <= m; ++j) {
        out.x1.values[j] = nn * (coarse.x1.values[j] - reference.x1.values[j]);
        out.x2.values[j] = nn * (coarse.x2.values[j] - reference.x2.values[j]);
    }
    return out;
}

PathPair limit_sde_solve(const SdeSystem& sys, const PathPair& reference, const GridPath& b,
                         const GridPath& w) {
    const std::size_t m = b.steps();
    if (w.steps() != m || reference.x1.steps() != m)
        throw std::invalid_argument("limit_sde_solve: grid mismatch");
    if (!sys.d_f11 || !sys.d1_f12 || !sys.d2_f12 || !sys.d1_f22 || !sys.d2_f22)
        throw std::invalid_argument("limit_sde_solve: derivative evaluators required");
    const double h = 1.0 / static_cast<double>(m);

    PathPair out;
    out.x1.values.assign(m + 1, 0.0);
    out.x2.values.assign(m + 1, 0.0);
    double u1 = 0.0, u2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double x1 = reference.x1.values[j];
        const double x2 = reference.x2.values[j];
        const double db = b.values[j + 1] - b.values[j];
        const double dw = w.values[j + 1] - w.values[j];
        const double dz12 = dw / kSqrt12 + 0.5 * db;
        const double dz21 = -dw / kSqrt12 + 0.5 * db;
        const double dz22 = 0.5 * h;

        const double a11 = sys.f11(x2), g11 = sys.d_f11(x2);
        const double a12 = sys.f12(x1, x2), g12_1 = sys.d1_f12(x1, x2), g12_2 = sys.d2_f12(x1, x2);
        const double a22 = sys.f22(x1, x2), g22_1 = sys.d1_f22(x1, x2), g22_2 = sys.d2_f22(x1, x2);

        const double du1 = g11 * u2 * db + (g12_1 * u1 + g12_2 * u2) * h
                         - (g11 * a22 * dz21 + g12_1 * a11 * dz12 + (g12_1 * a12 + g12_2 * a22) * dz22);
        const double du2 = (g22_1 * u1 + g22_2 * u2) * h
                         - (g22_1 * a11 * dz12 + (g22_1 * a12 + g22_2 * a22) * dz22);
        u1 += du1;
        u2 += du2;
        out.x1.values[j + 1] = u1;
        out.x2.values[j + 1] = u2;
    }
    return out;
}

}  // namespace arbfn
