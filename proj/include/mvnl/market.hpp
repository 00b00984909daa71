#pragma once

#include <string>
#include <vector>

#include "mvnl/curve.hpp"

namespace mvnl {

// Volatility floor standing in for "sigma_t != 0": values with |sigma| below
// it are rejected so every theta = (b - r) / sigma division stays safe.
inline constexpr double kSigmaFloor = 1e-10;

// Deterministic market coefficients: riskless rate r, long/short risk premia
// (theta_low applies to long positions, theta_high to short ones), volatility
// sigma, all on the common horizon [0, T].
struct MarketParams {
    MarketParams(CoefficientCurve r_, CoefficientCurve theta_low_, CoefficientCurve theta_high_,
                 CoefficientCurve sigma_);

    CoefficientCurve r;
    CoefficientCurve theta_low;
    CoefficientCurve theta_high;
    CoefficientCurve sigma;
    double horizon;
};

struct Violation {
    std::string curve;  // which coefficient
    double time;        // offending sample time
    std::string rule;   // which rule it breaks
};

// Empty report iff the market satisfies the coefficient constraints:
// theta_low >= 0 and theta_high >= 0 at every sample, and sigma positive with
// sigma >= kSigmaFloor at every sample. Positive sigma (not merely nonzero)
// is required for the long/short branch selection in the closed forms; see
// README. For both interpolation modes, per-sample bounds extend to all t.
std::vector<Violation> validate_market(const MarketParams& params);

// e^{-integral_t^T r ds}; equals 1 at t = T. Throws OutOfDomain outside [0, T].
double discount_factor(const MarketParams& params, double t);

// Initial wealth plus the target terminal mean. Construction rejects targets
// below the riskless benchmark x0 * e^{integral r}.
struct ProblemSpec {
    ProblemSpec(double x0_, double target_mean_, const MarketParams& market);

    double x0;
    double target_mean;  // the mean constraint level, "K" in file/CSV schemas
};

}  // namespace mvnl
