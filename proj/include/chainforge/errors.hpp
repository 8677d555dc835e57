#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainforge {

/// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class ChainNotFoundError : public Error {
public:
    using Error::Error;
};

/// A gate kind an operation cannot handle (GENERIC2 in a simulator, CPHASE in a tableau, ...).
class UnsupportedGateError : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace chainforge
