#include "mvnl/market.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mvnl {

MarketParams::MarketParams(CoefficientCurve r_, CoefficientCurve theta_low_,
                           CoefficientCurve theta_high_, CoefficientCurve sigma_)
    : r(std::move(r_)),
      theta_low(std::move(theta_low_)),
      theta_high(std::move(theta_high_)),
      sigma(std::move(sigma_)),
      horizon(r.horizon()) {
    if (theta_low.horizon() != horizon || theta_high.horizon() != horizon ||
        sigma.horizon() != horizon) {
        throw Error("market coefficient curves must share one horizon");
    }
}

std::vector<Violation> validate_market(const MarketParams& params) {
    std::vector<Violation> report;
    auto check_nonnegative = [&report](const CoefficientCurve& curve, const std::string& name) {
        for (const CurveSample& s : curve.samples()) {
            if (s.value < 0.0) {
                report.push_back({name, s.t, name + " must be >= 0"});
            }
        }
    };
    check_nonnegative(params.theta_low, "theta_low");
    check_nonnegative(params.theta_high, "theta_high");
    for (const CurveSample& s : params.sigma.samples()) {
        if (std::abs(s.value) < kSigmaFloor) {
            report.push_back({"sigma", s.t, "sigma must be nonzero (|sigma| >= sigma_floor)"});
        } else if (s.value < 0.0) {
            report.push_back({"sigma", s.t, "sigma must be positive"});
        }
    }
    return report;
}

double discount_factor(const MarketParams& params, double t) {
    return std::exp(-integrate(params.r, Transform::Identity, t, params.horizon));
}

ProblemSpec::ProblemSpec(double x0_, double target_mean_, const MarketParams& market)
    : x0(x0_), target_mean(target_mean_) {
    if (!std::isfinite(x0) || !std::isfinite(target_mean)) {
        throw Error("problem spec requires finite x0 and target mean");
    }
    const double benchmark = x0 * std::exp(integrate(market.r, Transform::Identity, 0.0, market.horizon));
    if (target_mean < benchmark) {
        throw Error("target mean " + std::to_string(target_mean) +
                    " is below the riskless benchmark x0*e^{int r} = " + std::to_string(benchmark));
    }
}

}  // namespace mvnl
