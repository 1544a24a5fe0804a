// errors.hpp — exception taxonomy for the solver pipeline
#pragma once

#include <stdexcept>
#include <string>

namespace qrabi {

// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Trial spectral point too close to a nonnegative-integer pole of f_n.
struct PoleProximity : Error {
    using Error::Error;
};

// g == 0 makes the recurrence weight undefined; use the decoupled closed form.
struct ZeroCoupling : Error {
    using Error::Error;
};

// Series cap reached before the tail criterion was met.
struct SeriesNoConverge : Error {
    using Error::Error;
};

// Root refinement called with endpoints of equal sign.
struct BracketInvalid : Error {
    using Error::Error;
};

// Ground-state scan produced no sign change even after widening.
struct NoRootFound : Error {
    using Error::Error;
};

// Branch coefficient sequence never decayed below threshold before the cap.
struct TailDivergence : Error {
    using Error::Error;
};

// Inner product requested between vectors in different displaced frames.
struct FrameMismatch : Error {
    using Error::Error;
};

// Statistics requested for branch states built from different roots.
struct RootMismatch : Error {
    using Error::Error;
};

// Angle-resolved variance formula used while cov(x,p) is non-negligible.
struct CrossTermViolation : Error {
    using Error::Error;
};

// Eigensolver or cutoff-growth loop failed to converge.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Least-squares normal equations rank deficient.
struct DegenerateFit : Error {
    using Error::Error;
};

// Ridge extraction requires a complete rectangular grid.
struct GridIncomplete : Error {
    using Error::Error;
};

// CSV column name not recognized.
struct UnknownField : Error {
    using Error::Error;
};

// Heatmap rendering requires a rectangular grid.
struct NonRectangularGrid : Error {
    using Error::Error;
};

// Oracle cross-check exceeded tolerance (CLI exit code 4).
struct ValidationMismatch : Error {
    using Error::Error;
};

}  // namespace qrabi
