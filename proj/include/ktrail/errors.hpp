#pragma once

#include <stdexcept>
#include <string>

namespace ktrail {

/// Precondition violated by the caller (bad vertex id, invalid witness, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph text; `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive oracle refused an instance above its size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant that the algorithm guarantees did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ktrail
