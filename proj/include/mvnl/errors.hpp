#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvnl {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A time or interval outside the curve/market domain [0, T].
struct OutOfDomain : Error {
    using Error::Error;
};

// |sigma_t| fell below the volatility floor where a division by sigma is required.
struct DegenerateSigma : Error {
    using Error::Error;
};

// The target mean exceeds the riskless benchmark while the long risk premium
// integrates to zero, so no finite-variance strategy reaches it.
struct DegenerateFrontier : Error {
    using Error::Error;
};

// The explicit scheme cannot satisfy its monotonicity (CFL) condition within
// the configured resource limits.
struct CflViolation : Error {
    using Error::Error;
};

// A grid value became NaN or infinite during a solve.
struct NonFiniteValue : Error {
    using Error::Error;
};

// A simulated wealth path became NaN or infinite. Carries the first offending
// path (lowest index) and the step at which it failed.
struct NonFinitePath : Error {
    NonFinitePath(const std::string& msg, std::int64_t path, int step)
        : Error(msg), path_index(path), step_index(step) {}
    std::int64_t path_index;
    int step_index;
};

// Grid solution and configuration shapes disagree.
struct ShapeMismatch : Error {
    using Error::Error;
};

// A model's drift parameters imply a negative risk premium.
struct NegativePremium : Error {
    using Error::Error;
};

// Malformed configuration input (files, flags, schema versions).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace mvnl
