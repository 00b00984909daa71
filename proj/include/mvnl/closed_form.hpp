#pragma once

#include <span>
#include <vector>

#include "mvnl/market.hpp"

namespace mvnl {

enum class Region {
    Long,      // wealth below the discounted target: hold a positive stock amount
    Short,     // wealth above it: hold a negative amount
    Boundary,  // exactly on it: hold nothing
};

const char* to_string(Region region);

struct PolicyDecision {
    double t = 0.0;
    double x = 0.0;
    double pi = 0.0;  // amount invested in the stock
    Region region = Region::Boundary;
    double threshold = 0.0;  // the switch level d * e^{-int_t^T r}
};

// The shifted target d = K + lambda of the unconstrained auxiliary problem,
// together with the multiplier lambda = d - K (>= 0 at the optimum).
struct AuxiliaryTarget {
    double d = 0.0;
    double lambda = 0.0;
};

struct FrontierPoint {
    double target_mean = 0.0;  // K
    double variance = 0.0;
    double d_star = 0.0;
    double lambda_star = 0.0;
};

// The three exponent factors the explicit solution is built from, evaluated
// for the tail [t, T]. Computing them once lets grid sweeps reuse them across
// many states at the same time.
struct ExponentSlice {
    double growth = 1.0;      // e^{int_t^T r}
    double discount = 1.0;    // e^{-int_t^T r}
    double damp_long = 1.0;   // e^{-int_t^T theta_low^2}
    double damp_short = 1.0;  // e^{-int_t^T theta_high^2}

    double threshold(double d) const { return d * discount; }
    double value(double x, double d) const {
        const double y = x * growth - d;
        return (x <= threshold(d) ? damp_long : damp_short) * y * y;
    }
};

ExponentSlice exponents_at(const MarketParams& params, double t);

// Value of the auxiliary problem started at (t, x) with shifted target d:
// e^{-int theta^2} (x e^{int r} - d)^2 with the long/short branch picked by
// the side of the discounted target. Throws OutOfDomain for t outside [0, T].
double value_function(const MarketParams& params, double t, double x, double d);

// The minimizing feedback amount pi(t, x) = -(theta/sigma)(x - d e^{-int r}),
// with theta_low on and below the threshold and theta_high above it.
// Throws DegenerateSigma when |sigma_t| < kSigmaFloor.
PolicyDecision feedback_policy(const MarketParams& params, double t, double x, double d);

// The shifted target attaining the dual maximum for the mean constraint:
// d = (K - x0 e^{int(r - theta_low^2)}) / (1 - e^{-int theta_low^2}), with the
// removable limit d = K when K equals the riskless benchmark. Throws
// DegenerateFrontier when K exceeds the benchmark but int theta_low^2 = 0.
AuxiliaryTarget auxiliary_target(const MarketParams& params, const ProblemSpec& problem);

// Minimal terminal variance for the problem's target mean:
// (K - x0 e^{int r})^2 / (e^{int theta_low^2} - 1). Cross-checked internally
// against value_function(0, x0; d*) - lambda*^2 to 1e-10 relative.
FrontierPoint frontier_point(const MarketParams& params, const ProblemSpec& problem);

// One frontier point per target mean; targets below the riskless benchmark
// raise an error naming the offending value.
std::vector<FrontierPoint> frontier_sweep(const MarketParams& params, double x0,
                                          std::span<const double> target_means);

}  // namespace mvnl
