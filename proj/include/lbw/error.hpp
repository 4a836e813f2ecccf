#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lbw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A caller broke an operation's precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// An oracle or table was asked to work beyond its size guard.
class ScaleGuardError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class TimeLimitExceeded : public Error {
public:
    TimeLimitExceeded() : Error("time limit exceeded") {}
};

}  // namespace lbw
