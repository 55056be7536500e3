#pragma once

#include <stdexcept>
#include <string>

namespace sierp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A digit is not representable in the requested radix.
struct DigitOutOfRange : Error {
    using Error::Error;
};

/// A binary digit pair (1,1) appeared while merging expansions.
struct ForbiddenPair : Error {
    using Error::Error;
};

/// The coordinate pair admits no expansion avoiding the pair (1,1).
struct NotInSet : Error {
    using Error::Error;
};

/// The side tag contradicts the expansion structure of the point.
struct InconsistentSide : Error {
    using Error::Error;
};

/// Division by the additive neutral element 0'.
struct DivisionByZeroPrime : Error {
    using Error::Error;
};

/// Numeric differentiation failed to stabilize.
struct NotDifferentiable : Error {
    using Error::Error;
};

/// Exact-mode derivative requested without a closed-form derivative.
struct MissingDerivative : Error {
    using Error::Error;
};

/// Exact-mode integral requested without a closed-form antiderivative.
struct MissingAntiderivative : Error {
    using Error::Error;
};

/// Adaptive quadrature exceeded its refinement depth limit.
struct ToleranceNotMet : Error {
    using Error::Error;
};

/// Cell-sampling resolution outside the supported range.
struct InvalidResolution : Error {
    using Error::Error;
};

} // namespace sierp
