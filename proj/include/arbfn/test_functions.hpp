#pragma once

#include <functional>
#include <string>

namespace arbfn {

/// Test function with first and second derivative evaluators.
/// The estimator formulas need phi, phi' and phi''; shipped catalog
/// entries are C^2 and bounded (polynomials are smoothly flattened
/// outside [-10, 10] so they stay inside the bounded algebra).
struct TestFunction {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    bool bounded = true;
};

TestFunction tf_constant(double c);
/// x on [-10,10], C^2-flattened to +-10.5 outside [-11,11].
TestFunction tf_identity_trunc();
/// Square of the truncated identity; second derivative 2 on [-10,10].
TestFunction tf_square_trunc();
TestFunction tf_sin();
TestFunction tf_cos();
/// C^infinity bump supported on (center-radius, center+radius),
/// scaled so the integral is 1.
TestFunction tf_bump(double center, double radius);

/// Positive bounded weights for the measure-change checks.
TestFunction tf_one_plus_tanh();
TestFunction tf_one_plus_square_trunc();

TestFunction make_test_function(const std::string& name);

/// Max relative mismatch between supplied derivatives and central finite
/// differences over `points` equispaced abscissae in [lo, hi].
double derivative_check(const TestFunction& tf, double lo, double hi, int points,
                        double step = 1e-5);

}  // namespace arbfn
