#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infoflow {

/// Unknown identifier, domain mismatch, or a value outside an operation's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text. Carries the 1-based line number when one is known (0 otherwise).
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    std::size_t line;
};

/// Shape mismatch inside a value (row lengths, non-natural cells).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured budget (variables, nodes) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation called outside its precondition, e.g. firing a disabled binding.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace infoflow
