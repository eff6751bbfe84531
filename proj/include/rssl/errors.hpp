#pragma once

#include <stdexcept>
#include <string>

namespace rssl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or length of an argument does not match its mate.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A scalar parameter is outside its admissible range.
class InvalidParameterError : public Error {
public:
    explicit InvalidParameterError(const std::string& msg) : Error(msg) {}
};

// Input data violates a precondition (non-finite values, empty corpus, ...).
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// A linear solve or factorization lost positive definiteness.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// File could not be opened, read or written.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// File contents do not parse as the expected format.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
    FormatError(const std::string& msg, size_t byte_offset)
        : Error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}

    size_t offset = 0;
};

} // namespace rssl
