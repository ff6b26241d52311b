#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multitilde {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates the invariants of its type (e.g. a pair (x,y) with x > y).
class InvalidValue : public Error {
public:
    using Error::Error;
};

/// A composition or substitution index lies outside the valid slot range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Operand counts disagree with an operator's arity.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// A requested size is outside the supported range (enumeration guards).
class OutOfSupportedRange : public Error {
public:
    using Error::Error;
};

/// The star-free compiler received an expression containing a Kleene star.
class StarNotSupported : public Error {
public:
    using Error::Error;
};

/// Expression syntax error; `offset` is the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace multitilde
