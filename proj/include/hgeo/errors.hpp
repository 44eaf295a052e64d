#pragma once

#include <stdexcept>
#include <string>

namespace hgeo {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query point violates a geometric precondition (outside the domain, etc).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative solver failed to converge; the message carries bracket info.
class SolverError : public Error {
public:
    using Error::Error;
};

/// The requested quantity cannot be computed to useful precision here.
class ConditioningError : public Error {
public:
    using Error::Error;
};

/// A projective map was applied at (or too close to) its horizon line.
class HorizonError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters, configs, or check identifiers.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace hgeo
