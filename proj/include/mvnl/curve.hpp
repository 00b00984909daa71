#pragma once

#include <span>
#include <vector>

#include "mvnl/errors.hpp"

namespace mvnl {

struct CurveSample {
    double t = 0.0;
    double value = 0.0;
};

enum class Interp {
    PiecewiseConstantLeft,  // value of the sample at or before t
    PiecewiseLinear,
};

enum class Transform {
    Identity,
    Square,
};

// A deterministic function of time on [0, T], stored as samples plus an
// interpolation rule. Sample times must be strictly increasing, start at 0
// and end at T; values must be finite.
class CoefficientCurve {
  public:
    CoefficientCurve(std::vector<CurveSample> samples, Interp interpolation);

    // Constant curve on [0, horizon].
    static CoefficientCurve constant(double value, double horizon);

    // Evaluate at t in [0, horizon]; throws OutOfDomain otherwise.
    double operator()(double t) const;

    double horizon() const { return samples_.back().t; }
    std::span<const CurveSample> samples() const { return samples_; }
    Interp interpolation() const { return interp_; }

    double min_sample_value() const;
    double max_sample_value() const;

  private:
    std::vector<CurveSample> samples_;
    Interp interp_;
};

// Integral of f(curve(s)) over [t0, t1], where f is the selected transform.
// Exact piecewise sums for piecewise-constant curves; composite trapezoid
// refined to max step 1e-3 * horizon for piecewise-linear ones.
// Requires 0 <= t0 <= t1 <= horizon; returns 0 when t0 == t1.
double integrate(const CoefficientCurve& curve, Transform transform, double t0, double t1);

}  // namespace mvnl
