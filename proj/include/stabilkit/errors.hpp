#ifndef STABILKIT_ERRORS_HPP
#define STABILKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabilkit {

// Malformed instance or certificate text. `line` is 1-based, 0 when the
// error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Caller violated an operation's stated precondition (e.g. running the
// factor-critical solver on a graph that is not factor-critical).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured size bound (oracle-style exhaustive code).
class BoundError : public std::runtime_error {
public:
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee the algorithms rely on failed to hold. Reaching
// this is a bug, not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace stabilkit

#endif
