#pragma once

#include <stdexcept>
#include <string>

namespace scoregen {

// Base for everything thrown by the library. The CLI maps subclasses to
// stable exit codes: validation 2, data 3, shape 4, numeric 5.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments, configs or flags.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed input bytes (XML, zip, weight files, token files).
// Carries the position where parsing stopped when one is known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
    ParseError(const std::string& what, long line, long byte_offset)
        : Error(what + " (line " + std::to_string(line) + ", byte " +
                std::to_string(byte_offset) + ")"),
          line_(line),
          byte_offset_(byte_offset) {}

    long line() const { return line_; }
    long byte_offset() const { return byte_offset_; }

private:
    long line_ = -1;
    long byte_offset_ = -1;
};

// Missing or insufficient data (empty corpus, corpus shorter than L+1, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// Tensor or file dimensions that do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Non-finite values, divergence, overflow.
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
public:
    using Error::Error;
};

// A score that cannot be represented in the output format.
class SerializationError : public Error {
public:
    using Error::Error;
};

// Weight-file integrity failures, kept distinct from generic data errors.
class ChecksumError : public DataError {
public:
    using DataError::DataError;
};

class VersionError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace scoregen
