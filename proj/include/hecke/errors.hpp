#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: malformed data, invalid configuration, violated preconditions.
// The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    using InputError::InputError;
};
struct InvalidCartanError : InputError {
    using InputError::InputError;
};
struct IncompatibleLatticeError : InputError {
    using InputError::InputError;
};
struct NotDominantError : InputError {
    using InputError::InputError;
};
struct NonUnitError : InputError {
    using InputError::InputError;
};
struct DivisionByZeroError : InputError {
    using InputError::InputError;
};

// Computation gave up: support guard tripped, solver budget exhausted.
// The CLI maps these to exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

struct BudgetExceededError : ResourceError {
    using ResourceError::ResourceError;
};
struct SolveFailedError : ResourceError {
    using ResourceError::ResourceError;
};
struct InconclusiveError : ResourceError {
    using ResourceError::ResourceError;
};

// Must never fire; indicates a broken internal invariant (e.g. a length
// formula bug surfacing as a missing descent).
struct NoDescentError : Error {
    using Error::Error;
};

}  // namespace hecke
