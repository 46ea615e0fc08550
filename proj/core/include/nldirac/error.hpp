#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nldirac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller
/// (shape mismatch, wrong coordinate system, bad grid bounds, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Raised by the error-on-negative radicand policy.
class RadicandError : public Error {
public:
    RadicandError(const std::string& what, std::size_t index, double radicand)
        : Error(what), index_(index), radicand_(radicand) {}

    std::size_t index() const noexcept { return index_; }
    double radicand() const noexcept { return radicand_; }

private:
    std::size_t index_;
    double radicand_;
};

/// Closed-form amplitude requested outside its validity domain.
class DomainError : public Error {
public:
    DomainError(const std::string& what, double nearest_singular_point)
        : Error(what), nearest_(nearest_singular_point) {}

    double nearest_singular_point() const noexcept { return nearest_; }

private:
    double nearest_;
};

/// A model that does not separate under the stationary ansatz.
class UnsupportedModelError : public Error {
public:
    using Error::Error;
};

/// Non-finite values or blow-up during time stepping.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, std::size_t step, double time)
        : Error(what), step_(step), time_(time) {}

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }

private:
    std::size_t step_;
    double time_;
};

/// Malformed field or config file; `line()` is 1-based.
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace nldirac
