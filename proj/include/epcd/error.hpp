#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epcd {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// The iterative eigensolver ran out of budget before an eigenpair met the tolerance.
class EigenSolverError : public Error {
public:
    EigenSolverError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// Zero-based index (in leading order) of the first eigenpair that failed to converge.
    std::size_t eigenpair_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace epcd
