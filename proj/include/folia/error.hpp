#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folia {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces (number of variables differ).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The caller violated a documented precondition (bad index, wrong spec kind, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A structural identity that must hold by theory failed to hold.
/// Raised loudly instead of returning a quietly wrong value.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Expression syntax error; `offset` is the byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace folia
