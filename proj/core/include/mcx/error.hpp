#pragma once

#include <stdexcept>
#include <string>

namespace mcx {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or an identifier that does not resolve (CLI exit code 2).
class ReferenceError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a mathematical precondition (CLI exit code 1).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A postcondition the library guarantees did not hold (CLI exit code 3).
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace mcx
