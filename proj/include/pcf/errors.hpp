#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pcf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value passed to an operation violates its preconditions.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A configuration parameter is out of its legal range (e.g. k >= n).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// The k-NN graph has more than one connected component.
class DisconnectedManifoldError : public Error {
public:
    DisconnectedManifoldError(std::string msg, std::vector<int> sizes)
        : Error(std::move(msg)), component_sizes(std::move(sizes)) {}
    std::vector<int> component_sizes;
};

/// A point coincides with the sphere center; the projection is undefined.
class DegeneratePointError : public Error {
public:
    using Error::Error;
};

/// De-scaled gaze angles fall outside the principal ranges of the inverse map.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// A cached intermediate does not belong to the parameters it is used with.
class ContractViolationError : public Error {
public:
    using Error::Error;
};

/// A file does not match its declared binary or CSV format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A file parses but contains invalid values (non-finite, wrong row counts).
class DataError : public Error {
public:
    using Error::Error;
};

/// An optimization or eigensolve failed to produce a usable result.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure, annotated with the path involved.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace pcf
