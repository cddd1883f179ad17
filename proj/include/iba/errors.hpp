#pragma once

#include <stdexcept>
#include <string>

namespace iba {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration exceeded its configured cap.
struct CapacityError : Error {
    using Error::Error;
};

/// A caller violated a documented precondition.
struct ContractError : Error {
    using Error::Error;
};

/// Input data is malformed (unknown factor value, wrong arity, ...).
struct MalformedInputError : Error {
    using Error::Error;
};

/// Exact influence queried on a d-set with zero probability.
struct UnreachableQueryError : Error {
    using Error::Error;
};

/// Non-finite loss or gradient during training.
struct NumericError : Error {
    using Error::Error;
};

/// File missing, unreadable, or schema mismatch.
struct IoError : Error {
    using Error::Error;
};

} // namespace iba
