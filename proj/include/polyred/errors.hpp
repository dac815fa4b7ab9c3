#pragma once

#include <stdexcept>
#include <string>

namespace polyred {

/// Caller passed arguments outside an operation's contract.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a structural requirement (malformed matrix row,
/// unknown label, incompatible certificates, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured state budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A builder's own derivation failed its mandatory self-check.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace polyred
