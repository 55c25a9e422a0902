#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgspec {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments to a construction or check (bad family parameters,
// unknown identifiers, k < 1, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Input that is well formed but violates a graph invariant
// (endpoint >= n, self-loop, duplicate edge).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Syntactically malformed graph document. line/column are 1-based; for
// graph6 input line is 1 and column is the byte offset + 1.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A function precondition on a numeric object failed (e.g. a matrix that is
// not symmetric handed to the symmetric eigensolver).
class ContractViolation : public Error {
public:
    using Error::Error;
};

// A composite graph would exceed the configured desk-scale vertex cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Laplacian energies need the average degree 2m/n, which does not exist for n = 0.
class UndefinedAverageError : public Error {
public:
    using Error::Error;
};

}  // namespace dgspec
