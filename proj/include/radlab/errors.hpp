#pragma once

#include <stdexcept>
#include <string>

namespace radlab {

/// Root bracketing/bisection could not certify a root below the search cap.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A bound term left the representable double range (reports omega).
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A default constant failed its validation scan; the message names the
/// witness point.
class ConstantValidationError : public std::runtime_error {
public:
    explicit ConstantValidationError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace radlab
