#pragma once

#include <stdexcept>
#include <string>

namespace bidlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different variable contexts.
class ContextError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of an oracle (e.g. a denominator that is not a power of the base).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for this variant or context.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug or a violated theorem instance.
class EngineError : public Error {
public:
    using Error::Error;
};

}  // namespace bidlab
