#pragma once

#include <stdexcept>
#include <string>

namespace semistab {

/// Out-of-range or otherwise malformed argument to an operation.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the hypotheses it is stated for.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input data violates a domain invariant (non-SNC divisor, duplicate ids, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace semistab
