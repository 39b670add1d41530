#pragma once

#include <stdexcept>
#include <string>

namespace orthopoly {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched matrix orders, arities, or ambient dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// NaN/Inf produced where a finite value is required.
struct NumericError : Error {
    using Error::Error;
};

/// A size parameter exceeds the configured cap (degree, symbolic n, order k).
struct CapacityError : Error {
    using Error::Error;
};

/// Input is degenerate for the requested construction (zero operator, rank collapse).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Random instance generation exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

/// A truncation scan ended without the value stabilizing.
struct ConvergenceError : Error {
    using Error::Error;
};

/// The polynomial failed the orthogonal-additivity pre-check; no representing map exists.
struct NotRepresentableError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// A word references an indeterminate outside the declared alphabet.
struct AlphabetError : Error {
    using Error::Error;
};

/// Malformed JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace orthopoly
