#pragma once

#include <stdexcept>
#include <string>

namespace wradii {

/// Raised when an argument lies outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The zero scan reached its ceiling before finding the requested number of
/// sign changes. This signals a ceiling that is too low, not an absence of zeros.
class ScanExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series or bisection failed to meet its stopping rule within the hard cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (ladder ordering, interlacing, ...).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wradii
