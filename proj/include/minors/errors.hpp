#pragma once

#include <stdexcept>
#include <string>

namespace minors {

/// Malformed matrix file input; carries 1-based line/column of the offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Request exceeds a hard implementation limit (order caps, memory caps, table range).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Floating-point determinant too far from an integer to round safely.
class RoundingHazardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a bounds-module function.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace minors
