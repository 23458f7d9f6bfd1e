#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edb {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- graph construction ---

class LoopEdgeError : public Error {
public:
    using Error::Error;
};

class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

class VertexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class EdgeOutOfRangeError : public Error {
public:
    using Error::Error;
};

// --- analysis preconditions ---

class SameVertexError : public Error {
public:
    using Error::Error;
};

class UnreachableError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

// --- constructions ---

class EmptyFactorError : public Error {
public:
    using Error::Error;
};

class TrivialFactorError : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRangeError : public Error {
public:
    using Error::Error;
};

// --- enumeration ---

class BoundExceededError : public Error {
public:
    using Error::Error;
};

// --- serialization ---

/// Error in an input text format. `offset` is a byte offset for single-line
/// formats (graph6) and a 1-based line number for line-oriented ones.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class BadHeaderError : public FormatError {
public:
    using FormatError::FormatError;
};

class BadLengthError : public FormatError {
public:
    using FormatError::FormatError;
};

class NonzeroPaddingError : public FormatError {
public:
    using FormatError::FormatError;
};

class SyntaxError : public FormatError {
public:
    using FormatError::FormatError;
};

class CountMismatchError : public FormatError {
public:
    using FormatError::FormatError;
};

}  // namespace edb
