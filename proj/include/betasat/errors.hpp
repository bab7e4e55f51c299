#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace betasat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A literal list mentions some variable with both polarities.
class TautologyError : public Error {
public:
    using Error::Error;
};

/// Malformed DIMACS or named-json input. `line` is 1-based (0 when the
/// position is only known as a byte offset).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t offset = 0)
        : Error(what), line_(line), offset_(offset) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

class NotBetaAcyclicError : public Error {
public:
    NotBetaAcyclicError() : Error("formula is not beta-acyclic") {}
};

/// Step `step` (1-based) of an elimination ordering names a variable that is
/// not DP-simplicial in the formula reached so far.
class NotDpSimplicialError : public Error {
public:
    NotDpSimplicialError(std::size_t step, std::uint32_t var, const std::string& name)
        : Error("variable " + name + " is not DP-simplicial at step " + std::to_string(step)),
          step_(step), var_(var) {}

    std::size_t step() const noexcept { return step_; }
    std::uint32_t variable() const noexcept { return var_; }

private:
    std::size_t step_;
    std::uint32_t var_;
};

class InvalidTraceError : public Error {
public:
    using Error::Error;
};

/// A brute-force routine was asked to enumerate beyond its guard.
class TooLargeError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Generator parameter outside the family's admissible range.
class OutOfRangeError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class NotBalancedError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class BadKError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class NotABackdoorError : public Error {
public:
    NotABackdoorError() : Error("some reduct under the given variable set is not beta-acyclic") {}
};

class NoHittingSetError : public Error {
public:
    NoHittingSetError() : Error("set family contains an empty set") {}
};

} // namespace betasat
