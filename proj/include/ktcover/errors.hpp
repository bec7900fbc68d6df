#pragma once

#include <stdexcept>
#include <string>

namespace ktcover {

/// Thrown when an instance exceeds the documented size limit of an exact
/// search. Callers may retry with `Limits::unsafe()`.
class SizeLimitExceeded : public std::runtime_error {
public:
    explicit SizeLimitExceeded(const std::string& what)
        : std::runtime_error("size limit exceeded: " + what) {}
};

/// Malformed text input (edge lists, weight files, orderings).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace ktcover
