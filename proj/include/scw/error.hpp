#pragma once

#include <stdexcept>
#include <string>

namespace scw {

enum class ErrorKind {
    invalid_argument,
    parse,
    degree_mismatch,
    algebra_mismatch,
    inconsistent_prescription,
    invalid_horn,
    unsupported,
    invariant_violation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown by the text readers; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace scw
