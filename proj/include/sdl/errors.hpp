#pragma once

#include <stdexcept>
#include <string>

namespace sdl {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/matrix size mismatch or out-of-range index.
struct DimensionError : Error {
    using Error::Error;
};

// An iterative solver ran out of its iteration budget.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

// Cholesky hit a non-positive pivot: the caller's SPD precondition is violated.
struct NotPositiveDefiniteError : Error {
    using Error::Error;
};

// A documented operation precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

// Input exceeds a hard size cap (enumeration, canonicalization, graph6).
struct LimitError : Error {
    using Error::Error;
};

struct Graph6ParseError : Error {
    using Error::Error;
};

// A bound's applicability condition fails (e.g. x_k^2 >= 1/2 for Nikiforov).
struct InapplicableBoundError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace sdl
