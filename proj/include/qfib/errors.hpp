// errors.hpp - exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace qfib {

// Base for all library errors so callers can catch broadly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotTraceless : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotSquareLength : Error {
    using Error::Error;
};

struct ToleranceNotMet : Error {
    using Error::Error;
};

struct NumericalOverflow : Error {
    using Error::Error;
};

struct ZeroLogDerivative : Error {
    using Error::Error;
};

struct NonpositiveInformation : Error {
    using Error::Error;
};

struct SingularState : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DimensionLimit : Error {
    using Error::Error;
};

struct UnsupportedOrder : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qfib
