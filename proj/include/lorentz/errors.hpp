#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lorentz {

// Base of every error raised by the library. The CLI maps InputError
// subclasses to exit code 2 and everything else to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class ZeroPolynomial : public InputError {
public:
    ZeroPolynomial() : InputError("operation undefined for the zero polynomial") {}
};

class WrongDegree : public InputError {
public:
    using InputError::InputError;
};

class DegreeMismatch : public InputError {
public:
    using InputError::InputError;
};

class NotInterior : public InputError {
public:
    using InputError::InputError;
};

class Unsupported : public InputError {
public:
    using InputError::InputError;
};

// Hypothesis of an operation is not met; carries the offending index.
class Inapplicable : public Error {
public:
    Inapplicable(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class InternalMismatch : public Error {
public:
    using Error::Error;
};

} // namespace lorentz
