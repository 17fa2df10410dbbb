#pragma once

#include <stdexcept>
#include <string>

namespace hypermetric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A point was passed to an operation whose precondition requires it to lie in a domain.
class OutsideDomain : public Error {
public:
    using Error::Error;
};

class InfeasibleClearance : public Error {
public:
    using Error::Error;
};

/// Configuration too close to a singularity of the formula (division by ~0).
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

class DisconnectedGrid : public Error {
public:
    using Error::Error;
};

class ResourceExceeded : public Error {
public:
    using Error::Error;
};

/// A search over a finite grid produced no witness.
class NotFound : public Error {
public:
    using Error::Error;
};

/// An inequality suite or metric was requested on a domain it does not apply to.
class SuiteMismatch : public Error {
public:
    using Error::Error;
};

/// Two algebraically equivalent evaluation routes disagreed beyond rounding.
class NumericalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace hypermetric
