#pragma once

#include <stdexcept>
#include <string>

namespace sgap {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text does not match the spec grammar (bad token, missing list, ...).
struct SyntaxError : Error {
    using Error::Error;
};

// Grammatically fine but semantically invalid (non-increasing gap list,
// zero period increment, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Matrix/vector shape mismatch.
struct DimensionError : Error {
    using Error::Error;
};

// Out-of-range index (e.g. pivot row outside 1..n).
struct IndexError : Error {
    using Error::Error;
};

// A gap specification fell through the presentation case analysis; this is a
// bug guard and should be unreachable for valid canonical specs.
struct CaseDispatchError : Error {
    using Error::Error;
};

// An iterative numeric routine hit its iteration cap before reaching the
// requested tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// A power-series coefficient that must be an integer came out fractional.
struct NonIntegerCoefficient : Error {
    using Error::Error;
};

// A zeta function that should satisfy zeta(0) = 1 does not.
struct NormalizationError : Error {
    using Error::Error;
};

// Operation is undefined for degenerate inputs (e.g. group predictions for |S| = 1).
struct DegenerateError : Error {
    using Error::Error;
};

}  // namespace sgap
