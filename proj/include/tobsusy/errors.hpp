#pragma once

#include <stdexcept>
#include <string>

namespace tobsusy {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid arguments, mismatched grids/tags, malformed inputs.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Runtime numerical failures: singular contours, unresolved winding steps,
// integration overflow, ill-conditioned weights, nodal zeros.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

// Requests outside the supported range (e.g. enumeration for M > 2).
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error(what) {}
};

}  // namespace tobsusy
