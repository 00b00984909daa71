#include "mvnl/closed_form.hpp"

#include <cmath>
#include <string>

namespace mvnl {

namespace {

void require_time_in_domain(const MarketParams& params, double t) {
    if (!(t >= 0.0) || !(t <= params.horizon)) {
        throw OutOfDomain("t = " + std::to_string(t) + " outside [0, " +
                          std::to_string(params.horizon) + "]");
    }
}

}  // namespace

const char* to_string(Region region) {
    switch (region) {
        case Region::Long: return "long";
        case Region::Short: return "short";
        case Region::Boundary: return "boundary";
    }
    return "unknown";
}

ExponentSlice exponents_at(const MarketParams& params, double t) {
    require_time_in_domain(params, t);
    const double T = params.horizon;
    const double int_r = integrate(params.r, Transform::Identity, t, T);
    ExponentSlice s;
    s.growth = std::exp(int_r);
    s.discount = std::exp(-int_r);
    s.damp_long = std::exp(-integrate(params.theta_low, Transform::Square, t, T));
    s.damp_short = std::exp(-integrate(params.theta_high, Transform::Square, t, T));
    return s;
}

double value_function(const MarketParams& params, double t, double x, double d) {
    return exponents_at(params, t).value(x, d);
}

PolicyDecision feedback_policy(const MarketParams& params, double t, double x, double d) {
    require_time_in_domain(params, t);
    const double sigma_t = params.sigma(t);
    if (std::abs(sigma_t) < kSigmaFloor) {
        throw DegenerateSigma("sigma(" + std::to_string(t) + ") below the volatility floor");
    }
    const double threshold = d * discount_factor(params, t);

    PolicyDecision out;
    out.t = t;
    out.x = x;
    out.threshold = threshold;
    if (x == threshold) {
        out.pi = 0.0;
        out.region = Region::Boundary;
    } else if (x < threshold) {
        out.pi = -(params.theta_low(t) / sigma_t) * (x - threshold);
        out.region = Region::Long;
    } else {
        out.pi = -(params.theta_high(t) / sigma_t) * (x - threshold);
        out.region = Region::Short;
    }
    return out;
}

AuxiliaryTarget auxiliary_target(const MarketParams& params, const ProblemSpec& problem) {
    const double T = params.horizon;
    const double int_r = integrate(params.r, Transform::Identity, 0.0, T);
    const double int_theta2 = integrate(params.theta_low, Transform::Square, 0.0, T);
    const double benchmark = problem.x0 * std::exp(int_r);

    if (problem.target_mean == benchmark) {
        // Removable limit of the quotient below: zero-risk target.
        return {problem.target_mean, 0.0};
    }
    if (int_theta2 <= 0.0) {
        throw DegenerateFrontier(
            "target mean above the riskless benchmark with zero long risk premium "
            "(int theta_low^2 = 0)");
    }
    AuxiliaryTarget out;
    out.d = (problem.target_mean - problem.x0 * std::exp(int_r - int_theta2)) /
            (1.0 - std::exp(-int_theta2));
    out.lambda = out.d - problem.target_mean;
    return out;
}

FrontierPoint frontier_point(const MarketParams& params, const ProblemSpec& problem) {
    const AuxiliaryTarget aux = auxiliary_target(params, problem);
    const double int_r = integrate(params.r, Transform::Identity, 0.0, params.horizon);
    const double int_theta2 = integrate(params.theta_low, Transform::Square, 0.0, params.horizon);
    const double benchmark = problem.x0 * std::exp(int_r);
    const double offset = problem.target_mean - benchmark;

    FrontierPoint out;
    out.target_mean = problem.target_mean;
    out.d_star = aux.d;
    out.lambda_star = aux.lambda;
    out.variance = offset == 0.0 ? 0.0 : offset * offset / (std::expm1(int_theta2));

    // The dual identity: the same variance must come out of the value function
    // route. A mismatch indicates a broken formula, never bad input.
    const double via_value =
        value_function(params, 0.0, problem.x0, aux.d) - aux.lambda * aux.lambda;
    const double tol = 1e-10 * std::max(out.variance, 1e-12 * (1.0 + offset * offset));
    if (std::abs(via_value - out.variance) > tol) {
        throw Error("frontier variance identity violated: formula " +
                    std::to_string(out.variance) + " vs value-function route " +
                    std::to_string(via_value));
    }
    return out;
}

std::vector<FrontierPoint> frontier_sweep(const MarketParams& params, double x0,
                                          std::span<const double> target_means) {
    std::vector<FrontierPoint> points;
    points.reserve(target_means.size());
    for (double K : target_means) {
        try {
            points.push_back(frontier_point(params, ProblemSpec(x0, K, params)));
        } catch (const DegenerateFrontier& e) {
            throw DegenerateFrontier("K = " + std::to_string(K) + ": " + e.what());
        } catch (const Error& e) {
            throw Error("K = " + std::to_string(K) + ": " + e.what());
        }
    }
    return points;
}

}  // namespace mvnl
