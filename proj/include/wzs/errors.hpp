#pragma once

#include <stdexcept>
#include <string>

namespace wzs {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a pole: rational function denominator vanishing at a point,
// or a gamma factor hitting a non-positive integer argument.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// Precondition violation: division by the zero function, sqrt of a negative,
// log of a non-positive value, inadmissible or singular parameter values.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A numeric procedure could not reach the requested accuracy: non-convergent
// series, tolerance unachievable at the working precision, acceleration
// routes disagreeing, unstable extrapolation.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

} // namespace wzs
