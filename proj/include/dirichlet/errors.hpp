#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirichlet {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic between an exact and a floating operand.
class ModeMismatch : public Error {
public:
    ModeMismatch() : Error("scalar mode mismatch (exact vs float)") {}
    explicit ModeMismatch(const std::string& what) : Error(what) {}
};

// Malformed arguments: empty sequences, non-prime parameters, non-square-free m, ...
class DomainError : public Error {
public:
    using Error::Error;
};

// Inversion of an element with f(1) = 0, i.e. a member of the maximal ideal.
class NonUnit : public Error {
public:
    NonUnit() : Error("function is not a unit: f(1) = 0") {}
    explicit NonUnit(const std::string& what) : Error(what) {}
};

// Division by a function that is zero on the whole window.
class ZeroDivisor : public Error {
public:
    ZeroDivisor() : Error("divisor is zero on the truncation window") {}
};

// The truncation window cannot hold the indices an operation needs.
class WindowTooSmall : public Error {
public:
    using Error::Error;
};

// An operation required ideal membership and the input failed it at `index`.
class NotMember : public Error {
public:
    NotMember(const std::string& what, std::size_t index) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace dirichlet
