#pragma once

#include <stdexcept>
#include <string>

namespace cuspgauge {

// Base for everything thrown by the library. The CLI maps subclasses to
// exit codes: invalid input -> 2, infeasible -> 2, numerical failure -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (degenerate lattice, non-coprime slope,
// bad spec, unparseable file).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold for these inputs.
class PreconditionError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

// Inputs are well-formed but no object exists (e.g. no metric profile for
// this (l1, t); l1 below the reachable minimum).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Internal cross-checks disagreed (bad grid, inconsistent derivative data).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace cuspgauge
