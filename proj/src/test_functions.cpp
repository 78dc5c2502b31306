#include "arbfn/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace arbfn {

namespace {

// Quintic smoothstep: s(0)=0, s(1)=1, s' = s'' = 0 at both ends.
double smoothstep(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double smoothstep_d(double t) { return 30.0 * t * t * (1.0 - t) * (1.0 - t); }
// Integral of smoothstep from 0 to t.
double smoothstep_i(double t) {
    const double t4 = t * t * t * t;
    return t4 * (2.5 + t * (-3.0 + t));
}

constexpr double kFlatStart = 10.0;

// Truncated identity: odd, equals x on [-10,10], constant +-10.5 beyond 11.
double trunc_id(double x) {
    const double a = std::fabs(x);
    if (a <= kFlatStart) return x;
    const double t = a - kFlatStart;
    const double val = (t >= 1.0) ? kFlatStart + 0.5 : kFlatStart + t - smoothstep_i(t);
    return std::copysign(val, x);
}

double trunc_id_d(double x) {
    const double a = std::fabs(x);
    if (a <= kFlatStart) return 1.0;
    const double t = a - kFlatStart;
    return (t >= 1.0) ? 0.0 : 1.0 - smoothstep(t);
}

double trunc_id_d2(double x) {
    const double a = std::fabs(x);
    if (a <= kFlatStart) return 0.0;
    const double t = a - kFlatStart;
    if (t >= 1.0) return 0.0;
    return std::copysign(smoothstep_d(t), -x);
}

double bump_raw(double t) {
    if (std::fabs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double bump_raw_d(double t) {
    if (std::fabs(t) >= 1.0) return 0.0;
    const double q = 1.0 - t * t;
    return bump_raw(t) * (-2.0 * t / (q * q));
}

double bump_raw_d2(double t) {
    if (std::fabs(t) >= 1.0) return 0.0;
    const double q = 1.0 - t * t;
    const double h1 = -2.0 * t / (q * q);
    const double h2 = -2.0 / (q * q) - 8.0 * t * t / (q * q * q);
    return bump_raw(t) * (h1 * h1 + h2);
}

// Composite Simpson over [-1, 1] of the unnormalized bump.
double bump_mass() {
    constexpr int kPanels = 1 << 14;
    const double h = 2.0 / kPanels;
    double acc = bump_raw(-1.0) + bump_raw(1.0);
    for (int i = 1; i < kPanels; ++i) acc += bump_raw(-1.0 + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TestFunction tf_constant(double c) {
    return {"constant", [c](double) { return c; }, [](double) { return 0.0; },
            [](double) { return 0.0; }, true};
}

TestFunction tf_identity_trunc() {
    return {"identity_trunc", trunc_id, trunc_id_d, trunc_id_d2, true};
}

TestFunction tf_square_trunc() {
    return {"square_trunc",
            [](double x) { const double g = trunc_id(x); return g * g; },
            [](double x) { return 2.0 * trunc_id(x) * trunc_id_d(x); },
            [](double x) {
                const double g = trunc_id(x), gd = trunc_id_d(x);
                return 2.0 * (gd * gd + g * trunc_id_d2(x));
            },
            true};
}

TestFunction tf_sin() {
    return {"sin", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
            [](double x) { return -std::sin(x); }, true};
}

TestFunction tf_cos() {
    return {"cos", [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); },
            [](double x) { return -std::cos(x); }, true};
}

TestFunction tf_bump(double center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("tf_bump: radius must be > 0");
    static const double unit_mass = bump_mass();
    const double scale = 1.0 / (unit_mass * radius);
    return {"bump",
            [center, radius, scale](double x) { return scale * bump_raw((x - center) / radius); },
            [center, radius, scale](double x) {
                return scale / radius * bump_raw_d((x - center) / radius);
            },
            [center, radius, scale](double x) {
                return scale / (radius * radius) * bump_raw_d2((x - center) / radius);
            },
            true};
}

TestFunction tf_one_plus_tanh() {
    return {"one_plus_tanh", [](double x) { return 1.0 + std::tanh(x); },
            [](double x) { const double c = std::cosh(x); return 1.0 / (c * c); },
            [](double x) {
                const double c = std::cosh(x);
                return -2.0 * std::tanh(x) / (c * c);
            },
            true};
}

TestFunction tf_one_plus_square_trunc() {
    const TestFunction sq = tf_square_trunc();
    return {"one_plus_square_trunc",
            [f = sq.f](double x) { return 1.0 + f(x); }, sq.df, sq.d2f, true};
}

TestFunction make_test_function(const std::string& name) {
    if (name == "constant") return tf_constant(1.0);
    if (name == "identity") return tf_identity_trunc();
    if (name == "square") return tf_square_trunc();
    if (name == "sin") return tf_sin();
    if (name == "cos") return tf_cos();
    throw std::invalid_argument("make_test_function: unknown name '" + name + "'");
}

double derivative_check(const TestFunction& tf, double lo, double hi, int points, double step) {
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / points;
        const double fd1 = (tf.f(x + step) - tf.f(x - step)) / (2.0 * step);
        const double fd2 = (tf.f(x + step) - 2.0 * tf.f(x) + tf.f(x - step)) / (step * step);
        const double s1 = std::max(1.0, std::fabs(tf.df(x)));
        const double s2 = std::max(1.0, std::fabs(tf.d2f(x)));
        worst = std::max(worst, std::fabs(fd1 - tf.df(x)) / s1);
        worst = std::max(worst, std::fabs(fd2 - tf.d2f(x)) / s2);
    }
    return worst;
}

}  // namespace arbfn
