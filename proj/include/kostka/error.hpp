#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed text input (polynomials, r-partitions, order files, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A computation exceeded a configured size guardrail.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// An exact conversion was requested that does not hold
/// (e.g. a rational function that is not a Laurent polynomial).
class NotExact : public Error {
public:
    using Error::Error;
};

/// Division by zero in an exact domain.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A value that theory guarantees was violated. Always signals a bug or bad
/// input data; never silently repaired.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace kostka
