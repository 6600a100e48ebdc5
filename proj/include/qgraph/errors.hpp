#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

// Root of every error raised by the library. The CLI maps the subclasses to
// exit codes (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad graph descriptions, file syntax, invalid arguments.
class InputError : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public InputError {
public:
    EmptyGraph() : InputError("graph needs at least one vertex and one edge") {}
};

class DisconnectedGraph : public InputError {
public:
    using InputError::InputError;
};

class DanglingEndpoint : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class XOutOfRange : public InputError {
public:
    using InputError::InputError;
};

// Numerical failures: non-finite values, search limits.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonFiniteInput : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonFiniteEntry : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonFiniteSample : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class EnumerationLimitExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotAnEigenvalue : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class WindowCollision : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// A requested analysis does not apply to the given graph.
class PreconditionNotMet : public Error {
public:
    using Error::Error;
};

}  // namespace qgraph
