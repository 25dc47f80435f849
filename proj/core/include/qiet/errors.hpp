#pragma once

#include <stdexcept>
#include <string>

namespace qiet {

// Base class for recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct NonSquareFreeDiscriminant : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Raised when two values from distinct quadratic fields meet in one
// operation.  Discriminants are never promoted or mixed.
struct DiscriminantMismatch : Error {
    using Error::Error;
};

struct NotRingElement : Error {
    using Error::Error;
};

struct NonBijectivePermutation : Error {
    using Error::Error;
};

struct NonPositiveLength : Error {
    using Error::Error;
};

struct OutOfDomain : Error {
    using Error::Error;
};

struct EmptyInterval : Error {
    using Error::Error;
};

struct NotContained : Error {
    using Error::Error;
};

// An orbit scan ran past its step budget.  On minimal transformations the
// scans terminate, so hitting the cap usually flags a non-minimal input.
struct StepCapExceeded : Error {
    using Error::Error;
};

// An exact orbit coincidence between separation points, i.e. the input is
// not regular where regularity is required.
struct ConnectionError : Error {
    using Error::Error;
};

struct ClassBudgetExceeded : Error {
    using Error::Error;
};

struct NotTwoIntervals : Error {
    using Error::Error;
};

// Two independent computation routes disagreed.  This is a bug, never a
// property of the input.
struct InternalMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : Error {
    ParseError(const std::string& message, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace qiet
