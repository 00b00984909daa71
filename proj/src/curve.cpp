#include "mvnl/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mvnl {

namespace {

double apply(Transform f, double v) {
    return f == Transform::Square ? v * v : v;
}

}  // namespace

CoefficientCurve::CoefficientCurve(std::vector<CurveSample> samples, Interp interpolation)
    : samples_(std::move(samples)), interp_(interpolation) {
    if (samples_.size() < 2) {
        throw Error("curve needs at least two samples (at t = 0 and t = T)");
    }
    if (samples_.front().t != 0.0) {
        throw Error("curve must start at t = 0, got t = " + std::to_string(samples_.front().t));
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i].t) || !std::isfinite(samples_[i].value)) {
            throw Error("curve sample " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && samples_[i].t <= samples_[i - 1].t) {
            throw Error("curve sample times must be strictly increasing at index " +
                        std::to_string(i));
        }
    }
}

CoefficientCurve CoefficientCurve::constant(double value, double horizon) {
    if (!(horizon > 0.0)) {
        throw Error("curve horizon must be positive");
    }
    return CoefficientCurve({{0.0, value}, {horizon, value}}, Interp::PiecewiseConstantLeft);
}

double CoefficientCurve::operator()(double t) const {
    if (!(t >= 0.0) || !(t <= horizon())) {
        throw OutOfDomain("curve evaluated at t = " + std::to_string(t) +
                          " outside [0, " + std::to_string(horizon()) + "]");
    }
    // Index of the last sample with time <= t.
    auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                               [](double lhs, const CurveSample& s) { return lhs < s.t; });
    std::size_t i = static_cast<std::size_t>(it - samples_.begin()) - 1;
    if (interp_ == Interp::PiecewiseConstantLeft || i + 1 == samples_.size()) {
        return samples_[i].value;
    }
    const CurveSample& a = samples_[i];
    const CurveSample& b = samples_[i + 1];
    const double w = (t - a.t) / (b.t - a.t);
    return a.value + w * (b.value - a.value);
}

double CoefficientCurve::min_sample_value() const {
    double m = samples_.front().value;
    for (const CurveSample& s : samples_) m = std::min(m, s.value);
    return m;
}

double CoefficientCurve::max_sample_value() const {
    double m = samples_.front().value;
    for (const CurveSample& s : samples_) m = std::max(m, s.value);
    return m;
}

double integrate(const CoefficientCurve& curve, Transform transform, double t0, double t1) {
    const double T = curve.horizon();
    if (!(t0 >= 0.0) || !(t1 <= T) || !(t0 <= t1)) {
        throw OutOfDomain("integration bounds [" + std::to_string(t0) + ", " +
                          std::to_string(t1) + "] invalid for horizon " + std::to_string(T));
    }
    if (t0 == t1) {
        return 0.0;
    }

    const auto samples = curve.samples();
    double sum = 0.0;
    if (curve.interpolation() == Interp::PiecewiseConstantLeft) {
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            const double a = std::max(samples[i].t, t0);
            const double b = std::min(samples[i + 1].t, t1);
            if (b > a) {
                sum += apply(transform, samples[i].value) * (b - a);
            }
        }
        return sum;
    }

    // Piecewise-linear: trapezoid per clipped piece, subdivided so that no
    // step exceeds 1e-3 * T. Exact for the identity transform.
    const double max_step = 1e-3 * T;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double a = std::max(samples[i].t, t0);
        const double b = std::min(samples[i + 1].t, t1);
        if (b <= a) continue;
        const double va = samples[i].value;
        const double vb = samples[i + 1].value;
        const double slope = (vb - va) / (samples[i + 1].t - samples[i].t);
        auto eval = [&](double t) { return va + slope * (t - samples[i].t); };
        const int steps = std::max(1, static_cast<int>(std::ceil((b - a) / max_step)));
        const double h = (b - a) / steps;
        double piece = 0.5 * (apply(transform, eval(a)) + apply(transform, eval(b)));
        for (int k = 1; k < steps; ++k) {
            piece += apply(transform, eval(a + k * h));
        }
        sum += piece * h;
    }
    return sum;
}

}  // namespace mvnl
