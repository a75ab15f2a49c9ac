#pragma once

#include <stdexcept>
#include <string>

namespace concentra {

// Validation-class failures (bad inputs, broken preconditions). CLI exit 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric-class failures (quadrature, sampling, solver breakdown). CLI exit 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteValue : NumericError {
    using NumericError::NumericError;
};
struct NotPositiveDefinite : ValidationError {
    using ValidationError::ValidationError;
};
struct ResolutionTooCoarse : ValidationError {
    using ValidationError::ValidationError;
};
struct NotOnManifold : ValidationError {
    using ValidationError::ValidationError;
};
struct MixedDimensions : ValidationError {
    using ValidationError::ValidationError;
};
struct QuadratureFailure : NumericError {
    using NumericError::NumericError;
};
struct MonteCarloVarianceTooHigh : NumericError {
    using NumericError::NumericError;
};
struct EnvelopeViolation : NumericError {
    using NumericError::NumericError;
};
struct AcceptanceTooLow : NumericError {
    using NumericError::NumericError;
};
struct UnsupportedDensity : ValidationError {
    using ValidationError::ValidationError;
};
struct LengthMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct SizeTooLarge : ValidationError {
    using ValidationError::ValidationError;
};
struct Infeasible : NumericError {
    using NumericError::NumericError;
};
struct OddOrderUnsupported : ValidationError {
    using ValidationError::ValidationError;
};
struct NonPositiveValue : ValidationError {
    using ValidationError::ValidationError;
};
struct UnknownProblem : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace concentra
