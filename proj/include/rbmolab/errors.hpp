#pragma once

#include <stdexcept>
#include <string>

namespace rbmolab {

// Validation errors: bad inputs detected before any computation runs.
// The CLI maps these to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateCube : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptyFamily : ValidationError {
    using ValidationError::ValidationError;
};
struct BadDilation : ValidationError {
    using ValidationError::ValidationError;
};
struct TopLevelTooSmall : ValidationError {
    using ValidationError::ValidationError;
};
struct BadBeta : ValidationError {
    using ValidationError::ValidationError;
};
struct NotNested : ValidationError {
    using ValidationError::ValidationError;
};
struct SamePoint : ValidationError {
    using ValidationError::ValidationError;
};
struct NoAdmissibleTriples : ValidationError {
    using ValidationError::ValidationError;
};
struct BadAnnulus : ValidationError {
    using ValidationError::ValidationError;
};
struct ZeroMassCube : ValidationError {
    using ValidationError::ValidationError;
};
struct NoEligibleCubes : ValidationError {
    using ValidationError::ValidationError;
};

// Runtime failures of the numerical machinery. CLI exit code 3.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rbmolab
