#pragma once

#include <stdexcept>
#include <string>

namespace singidx {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text: polynomial grammar, problem files. Carries a byte
// offset into the offending text when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A mathematical precondition failed: non-isolated zero, vector field not
// tangent, infinite colength where a finite one is required, and so on.
class MathError : public Error {
public:
    explicit MathError(const std::string& msg) : Error(msg) {}
};

// Two independent computation routes disagreed. Signals a bug, never a
// property of the input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace singidx
