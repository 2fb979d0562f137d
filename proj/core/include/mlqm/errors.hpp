#pragma once

#include <stdexcept>
#include <string>

namespace mlqm {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Deformation parameters outside their admissible range (beta out of [0,1),
// non-positive frequency, state outside the physical band, ...).
struct NonPhysicalConfigError : Error {
    using Error::Error;
};

// The weight exponent is undefined because beta + betaPrime == 0.
struct DegenerateWeightError : Error {
    using Error::Error;
};

// Requested the (n, tau) = (0, -1) level, which has no solution.
struct NoGroundNegativeError : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget above tolerance.
struct NoConvergenceError : Error {
    using Error::Error;
};

// Index pair outside the generator range for the requested dimension.
struct BadIndicesError : Error {
    using Error::Error;
};

// A relation that must close exactly left a nonzero operator behind.
// The offending normal form is carried in the message.
struct NonZeroResidualError : Error {
    using Error::Error;
};

} // namespace mlqm
